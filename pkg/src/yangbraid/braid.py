"""Braid group actions on node-indexed tuples of monic rational functions.

A tuple is a plain Python tuple of :class:`RootMultiset`, indexed by node
minus one.  Two actions live here:

* the *highest-weight* action on degree-zero tuples (eigenvalue data), which
  pairs node ``i`` with ``(a[j][i], d_j)``;
* the *monic* action on arbitrary tuples (Drinfeld-polynomial data), which
  pairs node ``i`` with ``(a[i][j], d_i)``.

They are intertwined by :func:`hw_ratio`, and :func:`solve_difference` inverts
that map one component at a time.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import (
    CartanData,
    is_positive,
    is_reduced,
    simple_root,
    weyl_apply,
)
from .errors import (
    NonzeroChainSum,
    NonzeroDegree,
    NotPolynomial,
    NotReduced,
    PolynomialityViolation,
)
from .exact import ONE, GlobalParams, Poly, RootMultiset, rat


def ones(cd: CartanData) -> tuple:
    return (ONE,) * cd.n


def degree(mu) -> tuple:
    """Degree vector, read as a weight in fundamental-weight coordinates."""
    return tuple(f.degree for f in mu)


def is_drinfeld(mu) -> bool:
    return all(f.is_polynomial() for f in mu)


def hw_ratio(cd: CartanData, gp: GlobalParams, mu) -> tuple:
    """Component ``i`` is ``mu_i(u + hbar d_i) / mu_i(u)``."""
    return tuple(f.shift(-gp.hbar * d) / f for f, d in zip(mu, cd.d))


def _factor(cd, gp, j, i, src, hw):
    """The product of shifted copies of ``src`` that generator ``j`` puts on node ``i``."""
    if hw:
        a, d = abs(cd.a[j - 1][i - 1]), cd.d[j - 1]
    else:
        a, d = abs(cd.a[i - 1][j - 1]), cd.d[i - 1]
    factor = ONE
    for k in range(a):
        factor = factor * src.shift(gp.hbar * d * Fraction(a - 2 * k, 2))
    return factor


def _generator(cd, gp, j, x, *, hw, inverse):
    cd.check_node(j)
    step = gp.hbar * cd.d[j - 1]
    if inverse:
        # the forward map sends x_j to 1 / x_j(u + hbar d_j); undo that first,
        # then divide out the factors it multiplied into the other nodes
        src = x[j - 1].shift(-step).inverse()
    else:
        src = x[j - 1]
    out = []
    for i, comp in enumerate(x, start=1):
        if i == j:
            out.append(src if inverse else src.shift(step).inverse())
        elif not cd.a[i - 1][j - 1] or not src:
            out.append(comp)
        else:
            factor = _factor(cd, gp, j, i, src, hw)
            out.append(comp / factor if inverse else comp * factor)
    return tuple(out)


def act_hw(cd: CartanData, gp: GlobalParams, j: int, lam) -> tuple:
    return _generator(cd, gp, j, lam, hw=True, inverse=False)


def act_hw_inverse(cd: CartanData, gp: GlobalParams, j: int, lam) -> tuple:
    return _generator(cd, gp, j, lam, hw=True, inverse=True)


def act_monic(cd: CartanData, gp: GlobalParams, j: int, mu) -> tuple:
    return _generator(cd, gp, j, mu, hw=False, inverse=False)


def act_monic_inverse(cd: CartanData, gp: GlobalParams, j: int, mu) -> tuple:
    return _generator(cd, gp, j, mu, hw=False, inverse=True)


def act_word(cd: CartanData, gp: GlobalParams, word, x, *, hw: bool = False) -> tuple:
    """Left action of a braid word; the rightmost letter acts first."""
    step = act_hw if hw else act_monic
    x = tuple(x)
    for j in reversed(cd.check_word(word)):
        x = step(cd, gp, j, x)
    return x


def suffix_images(cd: CartanData, gp: GlobalParams, word, P) -> list:
    """``out[r]`` is the image of ``P`` under the suffix ``word[r+1:]``.

    This is the chain ``T_{w_r}(P)`` read along the word, computed with one
    generator application per position.
    """
    word = cd.check_word(word)
    out = [None] * len(word)
    x = tuple(P)
    for r in range(len(word) - 1, -1, -1):
        out[r] = x
        x = act_monic(cd, gp, word[r], x)
    return out


def solve_difference(gp: GlobalParams, lam: RootMultiset, d: int) -> RootMultiset:
    """The unique ``mu`` with ``mu(u + hbar d) / mu(u) = lam``.

    Roots of ``lam`` are grouped into chains ``x0 + k*step`` with
    ``step = hbar * d``; within a chain ``mu`` carries the running sum of the
    multiplicities of ``lam`` strictly below it.
    """
    if lam.degree != 0:
        raise NonzeroDegree(f"degree {lam.degree} != 0")
    step = gp.hbar * d
    chains: dict = {}
    for a, m in lam.items():
        chains.setdefault(a % abs(step), []).append((a, m))
    out = {}
    for base in sorted(chains):
        members = sorted(chains[base], key=lambda am: (am[0] - base) / step)
        if sum(m for _, m in members) != 0:
            raise NonzeroChainSum(f"chain through {base} has nonzero total multiplicity")
        running = 0
        for (a, m), (nxt, _) in zip(members, members[1:] + [(None, 0)]):
            running += m
            if not running:
                continue
            # mu carries `running` on every chain point after a, up to the next root
            k = 1
            while True:
                point = a + k * step
                out[point] = running
                if point == nxt:
                    break
                k += 1
    return RootMultiset(out)


def extremal_xi(cd: CartanData, gp: GlobalParams, P, word) -> tuple:
    word = cd.check_word(word)
    if not is_reduced(cd, word):
        raise NotReduced(f"{word} is not reduced")
    return hw_ratio(cd, gp, act_word(cd, gp, word, P))


def extremal_poly(cd: CartanData, gp: GlobalParams, P, word, i: int) -> Poly:
    """``T_w(P)_i`` or its inverse, whichever the sign of ``w^-1(alpha_i)`` picks."""
    word = cd.check_word(word)
    cd.check_node(i)
    if not is_reduced(cd, word):
        raise NotReduced(f"{word} is not reduced")
    comp = act_word(cd, gp, word, P)[i - 1]
    back = weyl_apply(cd, tuple(reversed(word)), simple_root(cd, i), kind="root")
    chosen = comp if is_positive(back) else comp.inverse()
    try:
        return chosen.expand()
    except NotPolynomial as exc:
        raise PolynomialityViolation(f"node {i}, word {word}: {chosen!r}") from exc


def torus_act(cd: CartanData, j: int, t) -> tuple:
    cd.check_node(j)
    tj = rat(t[j - 1])
    return tuple(rat(ti) * tj ** (-cd.a[i][j - 1]) for i, ti in enumerate(t))


def xi_from_a_series(cd: CartanData, gp: GlobalParams, A) -> tuple:
    h = gp.hbar
    out = []
    for i in range(cd.n):
        num = ONE
        for j in range(cd.n):
            if j == i:
                continue
            aji = cd.a[j][i]
            for r in range(1, -aji + 1):
                num = num * A[j].shift(h * cd.d[j] * Fraction(2 * r + aji, 2))
        den = A[i] * A[i].shift(h * cd.d[i])
        out.append(num / den)
    return tuple(out)
