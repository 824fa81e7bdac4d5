"""The quantum loop side: braid action on l-weights, the q-Hecke matrices,
and a truncated check that the transported Yangian operators intertwine.

An l-weight component is stored as ``(weight, roots)``: ``weight`` is the
exponent ``mu_i`` with ``K_i`` acting by ``q_i^mu_i``, and ``roots`` is a
degree-zero :class:`QRootMultiset` so that the series is

    Psi_i(z) = q_i^mu_i * prod (1 - b/z)^mult = q_i^mu_i * prod (z - b)^mult / z^0

with ``b = a q^m``.  The same rational function also gives the expansion at
``z = 0``; :func:`expansions_agree` checks that its constant term there is
``q_i^-mu_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .cartan import CartanData
from .errors import NonzeroChainSum, TruncationTooSmall
from .exact import GlobalParams, TruncSeries, mat_mul, mat_product, mat_sub, qnum, rat, rat_str
from .hecke import alternating, build_model
from .qfield import QFrac, q_number, q_power


class QRootMultiset:
    """Finite map ``(a, m) -> mult`` standing for ``prod (z - a q^m)^mult``."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict = {}
        for (a, m), mult in items:
            a = rat(a)
            if not a:
                raise ValueError("q-roots must be nonzero")
            if not isinstance(m, int) or not isinstance(mult, int):
                raise TypeError("q-exponents and multiplicities are ints")
            acc[(a, m)] = acc.get((a, m), 0) + mult
        self._entries = {k: v for k, v in sorted(acc.items()) if v}
        self._hash = None

    def items(self):
        return self._entries.items()

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        return isinstance(other, QRootMultiset) and self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._entries.items()))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{rat_str(a)}*q^{m}: {k}" for (a, m), k in self._entries.items())
        return f"QRootMultiset({{{inner}}})"

    @property
    def degree(self) -> int:
        return sum(self._entries.values())

    def __mul__(self, other):
        out = dict(self._entries)
        for key, k in other._entries.items():
            out[key] = out.get(key, 0) + k
        return QRootMultiset(out)

    def inverse(self):
        return QRootMultiset({key: -k for key, k in self._entries.items()})

    def __truediv__(self, other):
        return self * other.inverse()

    def shift_exponent(self, c: int) -> "QRootMultiset":
        """Roots ``a q^m`` become ``a q^(m + c)``; this is ``z -> z q^-c``."""
        return QRootMultiset({(a, m + c): k for (a, m), k in self._entries.items()})

    def is_polynomial(self) -> bool:
        return all(k > 0 for k in self._entries.values())


@dataclass(frozen=True)
class LWeight:
    weight: int
    roots: QRootMultiset = field(default_factory=QRootMultiset)


def trivial_lweight(cd: CartanData) -> tuple:
    return tuple(LWeight(0) for _ in cd.nodes)


def lweight_from_drinfeld(cd: CartanData, P) -> tuple:
    """``Psi_i = q_i^-deg P_i(q_i^2 z) / P_i(z)`` for q-Drinfeld polynomials."""
    out = []
    for poly, d in zip(P, cd.d):
        if not poly.is_polynomial():
            raise ValueError("Drinfeld data must have positive multiplicities")
        # P(q_i^2 z) is proportional to prod (z - a q^(m - 2 d_i))
        roots = poly.shift_exponent(-2 * d) / poly
        out.append(LWeight(poly.degree, roots))
    return tuple(out)


def expansions_agree(cd: CartanData, psi) -> bool:
    """Do the expansions at infinity and at zero have inverse constant terms?"""
    for comp, d in zip(psi, cd.d):
        roots = comp.roots
        if roots.degree != 0:
            return False
        scalar = Fraction(1)
        qexp = 0
        for (a, m), k in roots.items():
            scalar *= (-a) ** k
            qexp += m * k
        if scalar != 1 or qexp != -2 * d * comp.weight:
            return False
    return True


def lweight_mul(x, y) -> tuple:
    return tuple(LWeight(a.weight + b.weight, a.roots * b.roots) for a, b in zip(x, y))


def q_act_generator(cd: CartanData, j: int, psi) -> tuple:
    cd.check_node(j)
    jj = j - 1
    src = psi[jj]
    out = []
    for ii, comp in enumerate(psi):
        a = abs(cd.a[jj][ii])
        if a == 0:
            out.append(comp)
            continue
        factor = QRootMultiset()
        for ell in range(a):
            factor = factor * src.roots.shift_exponent(cd.d[jj] * (a - 2 * ell))
        roots = comp.roots / factor if ii == jj else comp.roots * factor
        weight = comp.weight - cd.a[ii][jj] * src.weight
        out.append(LWeight(weight, roots))
    return tuple(out)


def q_act_word(cd: CartanData, word, psi) -> tuple:
    for j in reversed(cd.check_word(word)):
        psi = q_act_generator(cd, j, psi)
    return psi


def q_solve_difference(roots: QRootMultiset, d: int) -> QRootMultiset:
    """The unique ``P`` with ``P(q^(2d) z) / P(z)`` having the given roots.

    Roots ``a q^m`` are grouped into chains ``m mod 2d``; ``P`` carries minus
    the multiplicity sum of ``roots`` at and above each chain point.
    """
    step = 2 * d
    chains: dict = {}
    for (a, m), k in roots.items():
        chains.setdefault((a, m % step), []).append((m, k))
    out = {}
    for (a, _), members in chains.items():
        if sum(k for _, k in members) != 0:
            raise NonzeroChainSum(f"chain through {rat_str(a)} has nonzero total multiplicity")
        members.sort()
        at = dict(members)
        tail = 0
        for m in range(members[-1][0], members[0][0] - 1, -step):
            tail += at.get(m, 0)
            if tail:
                out[(a, m)] = -tail
    return QRootMultiset(out)


def suffix_drinfeld_data(cd: CartanData, P, word) -> list:
    """Along ``word``, the q-Drinfeld data behind each extremal component.

    Entry ``r`` solves component ``word[r]`` of the image of
    ``lweight_from_drinfeld(P)`` under ``word[r+1:]``.
    """
    psi = lweight_from_drinfeld(cd, P)
    word = cd.check_word(word)
    out = [None] * len(word)
    for r in range(len(word) - 1, -1, -1):
        j = word[r]
        out[r] = (j, q_solve_difference(psi[j - 1].roots, cd.d[j - 1]), psi[j - 1].weight)
        psi = q_act_generator(cd, j, psi)
    return out


# -- h-series ----------------------------------------------------------------


def q_act_hseries(cd: CartanData, j: int, mu) -> tuple:
    """Action on tuples of u-series ``mu_i = sum_r mu_i[r] u^r`` (``mu_i[0] = 0``)."""
    cd.check_node(j)
    jj = j - 1
    out = []
    for ii, series in enumerate(mu):
        a = abs(cd.a[ii][jj])
        if a == 0:
            out.append(tuple(series))
            continue
        sign = -1 if ii == jj else 1
        new = list(series)
        for b in range(a):
            e = cd.d[ii] * (a - 1 - 2 * b) + cd.d[jj]
            for r, c in enumerate(mu[jj]):
                if c:
                    new[r] = new[r] + sign * q_power(e * r) * c
        out.append(tuple(new))
    return tuple(out)


def hseries_from_lweight(cd: CartanData, psi, order: int) -> tuple:
    """The values of ``h_i(u)`` through ``u^(order-1)`` on an l-weight.

    From ``log Psi_i(z) = log q_i^mu_i - sum_s p_s z^-s / s`` with power sums
    ``p_s = sum mult * b^s`` and ``h_{i,s} = H_{i,s} / [s]_{q_i}``.
    """
    out = []
    for comp, d in zip(psi, cd.d):
        series = [QFrac(0)]
        for s in range(1, order):
            p = QFrac(0)
            for (a, m), k in comp.roots.items():
                p = p + k * a**s * q_power(m * s)
            series.append(-p / (s * (q_power(d * s) - q_power(-d * s))))
        out.append(tuple(series))
    return tuple(out)


# -- q-Hecke matrices ----------------------------------------------------------


@dataclass(frozen=True)
class QHeckeModel:
    cd: CartanData
    r: int
    T: tuple
    z: tuple

    def z_power(self, k: int) -> tuple:
        n = self.cd.n
        return tuple(
            tuple(self.z[a][a] ** k if a == b else QFrac(0) for b in range(n)) for a in range(n)
        )


def q_hecke_model(cd: CartanData, r: int) -> QHeckeModel:
    if r == 0:
        raise ValueError("r must be nonzero")
    n = cd.n
    mats = []
    for j in cd.nodes:
        cols = []
        for i in cd.nodes:
            col = [QFrac(0)] * n
            col[i - 1] = col[i - 1] + q_power(-r * cd.d[j - 1])
            col[j - 1] = col[j - 1] - q_number(cd.a[i - 1][j - 1], r * cd.d[i - 1])
            cols.append(col)
        mats.append(tuple(zip(*cols)))
    # z scales every h_{i,r} by q^-r, whatever the node: this is the image of
    # the Yangian shift under the loop embedding, and the only choice for which
    # T_j = z^{d_j} * (transported braid operator) reproduces the matrices above
    z = tuple(
        tuple(q_power(-r) if a == b else QFrac(0) for b in range(n)) for a in range(n)
    )
    return QHeckeModel(cd, r, tuple(mats), z)


def q_braid_operator(cd: CartanData, j: int, r: int) -> tuple:
    """The transported braid operator on ``span{h_{i,r}}``, without the z factor.

    ``h_{i,r} -> h_{i,r} - q_j^r [a_ij]_{q_i^r} h_{j,r}``.
    """
    n = cd.n
    cols = []
    for i in cd.nodes:
        col = [QFrac(0)] * n
        col[i - 1] = col[i - 1] + 1
        col[j - 1] = col[j - 1] - q_power(r * cd.d[j - 1]) * q_number(cd.a[i - 1][j - 1], r * cd.d[i - 1])
        cols.append(col)
    return tuple(zip(*cols))


@dataclass(frozen=True)
class QHeckeReport:
    braid_ok: bool
    quadratic_ok: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.braid_ok and self.quadratic_ok


def q_verify(model: QHeckeModel) -> QHeckeReport:
    cd, n = model.cd, model.cd.n
    one, zero = QFrac(1), QFrac(0)
    failures = []
    for i in cd.nodes:
        for j in cd.nodes:
            if i < j:
                m = cd.m[i - 1][j - 1]
                lhs = mat_product(alternating(model.T, i, j, m), n, one, zero)
                rhs = mat_product(alternating(model.T, j, i, m), n, one, zero)
                if lhs != rhs:
                    failures.append(("braid", i, j))
    braid_ok = not failures
    for i in cd.nodes:
        t = model.T[i - 1]
        zi = model.z_power(cd.d[i - 1])
        zi_inv = model.z_power(-cd.d[i - 1])
        plus = tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(t, zi_inv))
        prod = mat_mul(mat_sub(t, zi), plus)
        if any(x for row in prod for x in row):
            failures.append(("quadratic", i))
    quadratic_ok = not any(f[0] == "quadratic" for f in failures)
    return QHeckeReport(braid_ok, quadratic_ok, failures)


# -- truncated loop-embedding intertwining ------------------------------------------------


@dataclass(frozen=True)
class LoopEmbedding:
    """Series in ``v`` modulo ``v^N`` with ``q = e^(v/2)``."""

    cd: CartanData
    gp: GlobalParams
    N: int

    def __post_init__(self):
        if self.N < 1:
            raise TruncationTooSmall("need at least one v-coefficient")


def _exp_series(c: Fraction, order: int) -> TruncSeries:
    return TruncSeries(order, (c**n / factorial(n) for n in range(order)))


def _q_laurent_series(terms: dict, order: int) -> TruncSeries:
    """Expand ``sum_e c_e q^e`` as a series in v, using ``q = e^(v/2)``."""
    out = TruncSeries(order)
    for e, c in terms.items():
        out = out + _exp_series(Fraction(e, 2), order) * c
    return out


def embedding_prefactor(d: int, r: int, order: int) -> TruncSeries:
    """``v / (q_i^r - q_i^-r)`` as a series in v."""
    a = Fraction(r * d, 2)
    # (e^(av) - e^(-av)) / v, odd part of the exponential divided by v
    den = [2 * a ** (n + 1) / factorial(n + 1) if n % 2 == 0 else 0 for n in range(order)]
    return TruncSeries(order, den).inverse()


def embed_h(ctx: LoopEmbedding, i: int, r: int) -> list:
    """Coefficients of ``v^0 .. v^(N-1)``, each a dict ``(node, k) -> Fraction``."""
    if r == 0:
        raise ValueError("r must be nonzero")
    ctx.cd.check_node(i)
    h = ctx.gp.hbar
    pref = embedding_prefactor(ctx.cd.d[i - 1], r, ctx.N)
    borel = [h * (Fraction(r) / h) ** k / factorial(k) for k in range(ctx.N)]
    out = []
    for n in range(ctx.N):
        coeff = {}
        for k in range(n + 1):
            c = pref[n - k] * borel[k]
            if c:
                coeff[(i, k)] = c
        out.append(coeff)
    return out


@dataclass(frozen=True)
class IntertwineResult:
    ok: bool
    first_bad_order: int | None = None


def intertwine_check(ctx: LoopEmbedding, i: int, j: int, r: int) -> IntertwineResult:
    cd, N = ctx.cd, ctx.N
    model = build_model(cd, ctx.gp, N - 1)
    index = {b: n for n, b in enumerate(model.basis)}
    tau = model.Tau[j - 1]

    def apply(vec):
        dense = [Fraction(0)] * model.dim
        for b, c in vec.items():
            dense[index[b]] += c
        image = {}
        for row in range(model.dim):
            acc = sum((tau[row][col] * dense[col] for col in range(model.dim) if dense[col]), Fraction(0))
            if acc:
                image[model.basis[row]] = acc
        return image

    phi_i = embed_h(ctx, i, r)
    phi_j = embed_h(ctx, j, r)
    coeff = qnum(cd.a[i - 1][j - 1], r * cd.d[i - 1])
    shifted = {e + r * cd.d[j - 1]: c for e, c in coeff.terms().items()}
    c_series = _q_laurent_series(shifted, N)
    for n in range(N):
        lhs = apply(phi_i[n])
        rhs = dict(phi_i[n])
        for m in range(n + 1):
            if c_series[m]:
                for b, c in phi_j[n - m].items():
                    rhs[b] = rhs.get(b, 0) - c_series[m] * c
        rhs = {b: c for b, c in rhs.items() if c}
        if lhs != rhs:
            return IntertwineResult(False, n)
    return IntertwineResult(True)
