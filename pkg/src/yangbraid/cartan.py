"""Cartan data, root systems and Weyl group combinatorics.

Conventions
-----------
The Cartan matrix satisfies ``(alpha_i, alpha_j) = d_i * a[i][j]`` with minimal
symmetrizers ``d_i``.  Consequently

* on simple-root coordinates ``s_j(alpha_i) = alpha_i - a[j][i] * alpha_j``;
* ``alpha_j = sum_i a[i][j] * varpi_i``, so on fundamental-weight coordinates
  ``s_j`` sends ``m_i`` to ``m_i - m_j * a[i][j]``.

Node labels are 1-based wherever a node or a word is passed in (Bourbaki
numbering).  Matrices and coordinate vectors are ordinary 0-indexed tuples.
Words act on the left: ``(j1, ..., jp)`` applies ``s_jp`` first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import IllegalType, InternalInconsistency

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

# a_ij * a_ji -> braid exponent
_BRAID_EXPONENT = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        if s in _MIN_RANK:
            ok = isinstance(n, int) and n >= _MIN_RANK[s]
        elif s in _EXCEPTIONAL:
            ok = n in _EXCEPTIONAL[s]
        else:
            ok = False
        if not ok:
            raise IllegalType(f"no simple Lie type {s}{n}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text or "")
        if not m:
            raise IllegalType(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"


def _dynkin(t: LieType):
    """Symmetrizers and edge list (0-based) in Bourbaki numbering."""
    s, n = t.series, t.rank
    chain = [(i, i + 1) for i in range(n - 1)]
    if s == "A":
        return [1] * n, chain
    if s == "B":
        return [2] * (n - 1) + [1], chain
    if s == "C":
        return [1] * (n - 1) + [2], chain
    if s == "D":
        return [1] * n, chain[:-1] + [(n - 3, n - 1)]
    if s == "E":
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
        return [1] * n, edges
    if s == "F":
        return [2, 2, 1, 1], chain
    return [1, 3], chain


@dataclass(frozen=True)
class CartanData:
    type: LieType
    a: tuple
    d: tuple
    m: tuple = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    def check_node(self, j: int) -> None:
        if not (isinstance(j, int) and 1 <= j <= self.n):
            raise ValueError(f"node {j!r} outside 1..{self.n}")

    def check_word(self, word) -> tuple:
        word = tuple(word)
        for j in word:
            self.check_node(j)
        return word

    # -- root system -------------------------------------------------------

    @cached_property
    def positive_roots(self) -> tuple:
        n = self.n
        simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for root in frontier:
                for j in range(1, n + 1):
                    image = reflect_root(self, j, root)
                    if all(c >= 0 for c in image) and image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        return tuple(sorted(seen, key=lambda r: (sum(r), tuple(-c for c in r))))

    @cached_property
    def highest_root(self) -> tuple:
        top = max(self.positive_roots, key=sum)
        if any(sum(r) == sum(top) and r != top for r in self.positive_roots):
            raise InternalInconsistency("highest root is not unique")
        return top

    @property
    def rho(self) -> tuple:
        return (1,) * self.n

    def form(self, x, y) -> int:
        """Invariant form of two vectors in simple-root coordinates."""
        return sum(
            x[i] * self.d[i] * self.a[i][j] * y[j]
            for i in range(self.n)
            for j in range(self.n)
            if x[i] and y[j]
        )


def cartan_data(t: LieType | str) -> CartanData:
    if isinstance(t, str):
        t = LieType.parse(t)
    d, edges = _dynkin(t)
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        lo, hi = sorted((i, j), key=lambda k: d[k])
        # the short node sees the long one with multiplicity d_long / d_short
        a[hi][lo] = -1
        a[lo][hi] = -(d[hi] // d[lo])
    m = [
        [1 if i == j else _BRAID_EXPONENT[a[i][j] * a[j][i]] for j in range(n)]
        for i in range(n)
    ]
    for i in range(n):
        for j in range(n):
            if d[i] * a[i][j] != d[j] * a[j][i]:
                raise InternalInconsistency(f"{t}: not symmetrized at {(i, j)}")
    return CartanData(
        t, tuple(map(tuple, a)), tuple(d), tuple(map(tuple, m))
    )


def all_types(max_rank: int = 8):
    """Every simple type of rank at most ``max_rank``, in a fixed order."""
    out = []
    for s in "ABCD":
        out += [LieType(s, n) for n in range(_MIN_RANK[s], max_rank + 1)]
    for s, ranks in _EXCEPTIONAL.items():
        out += [LieType(s, n) for n in ranks if n <= max_rank]
    return out


# -- Weyl group ---------------------------------------------------------------


def reflect_root(cd: CartanData, j: int, root) -> tuple:
    jj = j - 1
    pairing = sum(root[i] * cd.a[jj][i] for i in range(cd.n))
    out = list(root)
    out[jj] -= pairing
    return tuple(out)


def reflect_weight(cd: CartanData, j: int, weight) -> tuple:
    jj = j - 1
    mj = weight[jj]
    return tuple(weight[i] - mj * cd.a[i][jj] for i in range(cd.n))


def weyl_apply(cd: CartanData, word, x, *, kind: str = "weight") -> tuple:
    """Apply a word to a weight (default) or, with ``kind="root"``, a root."""
    step = {"weight": reflect_weight, "root": reflect_root}[kind]
    x = tuple(x)
    for j in reversed(cd.check_word(word)):
        x = step(cd, j, x)
    return x


def is_positive(root) -> bool:
    return any(root) and all(c >= 0 for c in root)


def simple_root(cd: CartanData, i: int) -> tuple:
    return tuple(int(k == i - 1) for k in range(cd.n))


def inversion_set(cd: CartanData, word) -> list:
    word = cd.check_word(word)
    return [
        weyl_apply(cd, word[:b], simple_root(cd, word[b]), kind="root")
        for b in range(len(word))
    ]


def is_reduced(cd: CartanData, word) -> bool:
    return all(is_positive(r) for r in inversion_set(cd, word))


def action_matrix(cd: CartanData, word) -> tuple:
    """Columns are images of the simple roots; a canonical form of the element."""
    cols = [weyl_apply(cd, word, simple_root(cd, i), kind="root") for i in cd.nodes]
    return tuple(tuple(col[r] for col in cols) for r in range(cd.n))


def _greedy_longest(cd: CartanData, order) -> tuple:
    word = []
    while True:
        for i in order:
            # length goes up iff w(alpha_i) is still positive
            if is_positive(weyl_apply(cd, word, simple_root(cd, i), kind="root")):
                word.append(i)
                break
        else:
            return tuple(word)


@lru_cache(maxsize=None)
def longest_words(cd: CartanData) -> tuple:
    """Two reduced words for the longest element (equal for rank one)."""
    first = _greedy_longest(cd, list(cd.nodes))
    second = _greedy_longest(cd, list(reversed(cd.nodes)))
    size = len(cd.positive_roots)
    for w in (first, second):
        if len(w) != size or not is_reduced(cd, w):
            raise InternalInconsistency(f"{cd.type}: greedy word {w} is not w0")
    if action_matrix(cd, first) != action_matrix(cd, second):
        raise InternalInconsistency(f"{cd.type}: greedy words disagree")
    return first, second


def longest_word(cd: CartanData) -> tuple:
    return longest_words(cd)[0]


def is_longest_word(cd: CartanData, word) -> bool:
    word = cd.check_word(word)
    return (
        len(word) == len(cd.positive_roots)
        and is_reduced(cd, word)
        and action_matrix(cd, word) == action_matrix(cd, longest_word(cd))
    )


# -- Casimir constant ---------------------------------------------------------


@dataclass(frozen=True)
class KappaData:
    two_kappa: int
    c_g: Fraction

    @property
    def kappa(self) -> Fraction:
        return self.c_g / 4


def kappa(cd: CartanData) -> KappaData:
    theta = cd.highest_root
    # (theta, 2 rho) = 2 sum_i c_i d_i since (alpha_i, varpi_j) = d_i delta_ij
    c_g = Fraction(cd.form(theta, theta) + 2 * sum(c * d for c, d in zip(theta, cd.d)))
    half = c_g / 2
    if half.denominator != 1 or half <= 0:
        raise InternalInconsistency(f"{cd.type}: c_g/2 = {half} is not a positive integer")
    return KappaData(int(half), c_g)
