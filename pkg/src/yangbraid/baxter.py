"""Inverse quantized Cartan matrix, Baxter polynomials and pole sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .braid import suffix_images
from .cartan import CartanData, KappaData, is_reduced, kappa as compute_kappa, longest_words
from .errors import NotReduced, PolynomialityViolation
from .exact import (
    ONE,
    GlobalParams,
    LaurentPoly,
    RootMultiset,
    TruncSeries,
    qnum,
    series_matrix_inverse,
)


def quantized_cartan(cd: CartanData) -> list:
    """The Laurent matrix with entries ``[a_ij]_{z^{d_i}}``."""
    return [[qnum(cd.a[i][j], cd.d[i]) for j in range(cd.n)] for i in range(cd.n)]


@dataclass(frozen=True)
class QCartanInverse:
    cd: CartanData
    kappa: KappaData
    N: int
    v: tuple

    def coeff(self, i: int, j: int, r: int):
        """``v_ij^(r)`` for 1-based nodes; zero beyond the stored order."""
        series = self.v[i - 1][j - 1]
        return series[r] if 0 <= r < series.order else 0

    def window(self, i: int) -> range:
        d = self.cd.d[i - 1]
        return range(d, self.kappa.two_kappa - d + 1)


def qcartan_inverse(cd: CartanData, kappa: KappaData | None = None) -> QCartanInverse:
    kappa = kappa or compute_kappa(cd)
    N = kappa.two_kappa + 1
    v = series_matrix_inverse(quantized_cartan(cd), N)
    return QCartanInverse(cd, kappa, N, tuple(tuple(row) for row in v))


@dataclass(frozen=True)
class CartanAudit:
    valuation_ok: bool
    window_ok: bool
    inverse_ok: bool
    violations: list = field(default_factory=list)
    # negative coefficients past the window; reported, never asserted
    beyond_window_negative: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.valuation_ok and self.window_ok and self.inverse_ok


def audit(qci: QCartanInverse) -> CartanAudit:
    cd = qci.cd
    violations, beyond = [], []
    valuation_ok = window_ok = True
    for i in cd.nodes:
        win = qci.window(i)
        for j in cd.nodes:
            for r in range(qci.N):
                c = qci.coeff(i, j, r)
                if r < cd.d[i - 1] and c:
                    valuation_ok = False
                    violations.append(("valuation", i, j, r, c))
                elif r in win and c < 0:
                    window_ok = False
                    violations.append(("window", i, j, r, c))
                elif r > win.stop - 1 and c < 0:
                    beyond.append((i, j, r, c))
    # M has poles of order max(d) at zero, so the product mod z^N needs that
    # many extra coefficients of the inverse
    M = quantized_cartan(cd)
    longer = series_matrix_inverse(M, qci.N + max(cd.d))
    inverse_ok = True
    for i in range(cd.n):
        for j in range(cd.n):
            if longer[i][j].coeffs[: qci.N] != qci.v[i][j].coeffs:
                inverse_ok = False
                violations.append(("prefix", i + 1, j + 1, None, None))
            acc = [0] * qci.N
            for k in range(cd.n):
                for t, c in enumerate(_laurent_times_series(M[i][k], longer[k][j]).coeffs[: qci.N]):
                    acc[t] += c
            if acc != [int(i == j)] + [0] * (qci.N - 1):
                inverse_ok = False
                violations.append(("inverse", i + 1, j + 1, None, None))
    return CartanAudit(valuation_ok, window_ok, inverse_ok, violations, beyond)


def _laurent_times_series(f: LaurentPoly, s: TruncSeries) -> TruncSeries:
    """``f * s`` keeping only exponents ``0 .. s.order - 1``."""
    out = [0] * s.order
    for e, c in f.terms().items():
        for k, sk in enumerate(s.coeffs):
            if sk and 0 <= k + e < s.order:
                out[k + e] += c * sk
    return TruncSeries(s.order, out)


def fundamental_poles(qci: QCartanInverse, gp: GlobalParams, i: int, j: int) -> frozenset:
    """Poles of the fundamental module at node ``j``, seen from node ``i``."""
    di, dj = qci.cd.d[i - 1], qci.cd.d[j - 1]
    lo, hi = di - dj, qci.kappa.two_kappa - di - dj
    return frozenset(
        gp.hbar * Fraction(b, 2) for b in range(lo, hi + 1) if qci.coeff(i, j, b + dj) > 0
    )


def baxter_poly(qci: QCartanInverse, gp: GlobalParams, P, i: int) -> RootMultiset:
    cd = qci.cd
    out = ONE
    for j in cd.nodes:
        dj = cd.d[j - 1]
        for b in qci.window(i):
            v = qci.coeff(i, j, b)
            if v:
                out = out * P[j - 1].shift(gp.hbar * Fraction(b - dj, 2)) ** v
    return out


def pole_set(qci: QCartanInverse, gp: GlobalParams, P, i: int) -> frozenset:
    return baxter_poly(qci, gp, P, i).zeros()


def pole_set_union(qci: QCartanInverse, gp: GlobalParams, P, i: int) -> frozenset:
    """The same set, assembled from the fundamental pole sets."""
    out = set()
    for j in qci.cd.nodes:
        sigma = fundamental_poles(qci, gp, i, j)
        out |= {a + s for a in P[j - 1].zeros() for s in sigma}
    return frozenset(out)


def extremal_factors(cd: CartanData, gp: GlobalParams, P, word) -> list:
    """``(j_r, T_{w_r}(P)_{j_r})`` for every position, each checked polynomial."""
    word = cd.check_word(word)
    if not is_reduced(cd, word):
        raise NotReduced(f"{word} is not reduced")
    out = []
    for r, image in enumerate(suffix_images(cd, gp, word, P)):
        j = word[r]
        factor = image[j - 1]
        if not factor.is_polynomial():
            raise PolynomialityViolation(f"position {r + 1} of {word}: {factor!r}")
        out.append((j, factor))
    return out


def baxter_extremal(cd: CartanData, gp: GlobalParams, P, word, i: int) -> RootMultiset:
    cd.check_node(i)
    out = ONE
    for j, factor in extremal_factors(cd, gp, P, word):
        if j == i:
            out = out * factor
    return out


@dataclass(frozen=True)
class FactorizationReport:
    ok: bool
    # (word, node, extremal, direct) for every mismatch
    mismatches: list = field(default_factory=list)


def verify_factorization(cd: CartanData, gp: GlobalParams, qci: QCartanInverse, P) -> FactorizationReport:
    direct = [baxter_poly(qci, gp, P, i) for i in cd.nodes]
    mismatches = []
    for word in dict.fromkeys(longest_words(cd)):
        per_node = {i: ONE for i in cd.nodes}
        for j, factor in extremal_factors(cd, gp, P, word):
            per_node[j] = per_node[j] * factor
        for i in cd.nodes:
            if per_node[i] != direct[i - 1]:
                mismatches.append((word, i, per_node[i], direct[i - 1]))
    return FactorizationReport(not mismatches, mismatches)
