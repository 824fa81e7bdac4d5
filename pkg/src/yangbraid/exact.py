"""Exact arithmetic: polynomials, Laurent polynomials, truncated series, and
monic rational functions encoded by their roots."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Mapping

from .errors import NotPolynomial, SingularMatrix

Rat = Fraction


def rat(x) -> Fraction:
    """Parse ints, Fractions and strings like ``"-3/4"`` into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact or boolean value {x!r}")
    return Fraction(x)


def rat_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


# -- dense polynomials -------------------------------------------------------


class Poly:
    """Univariate polynomial over the rationals, coefficients lowest first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[rat_str(c) for c in self.coeffs]})"

    def __add__(self, other):
        other = _as_poly(other)
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "Poly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.lead
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + other.degree] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem)

    def monic(self) -> "Poly":
        return Poly(c / self.lead for c in self.coeffs) if self else self

    def is_monic(self) -> bool:
        return self.lead == 1


def _as_poly(x) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()


# -- Laurent polynomials -----------------------------------------------------


class LaurentPoly:
    """Laurent polynomial ``sum_k coeffs[k] z^(offset + k)``.

    Coefficients may be ints or Fractions; ints stay ints, which keeps the
    quantized Cartan computations cheap.
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, offset: int = 0, coeffs: Iterable = ()):
        coeffs = list(coeffs)
        lo = 0
        while lo < len(coeffs) and not coeffs[lo]:
            lo += 1
        coeffs = list(_trim(coeffs[lo:]))
        self.offset = offset + lo if coeffs else 0
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_terms(cls, terms: Mapping[int, object]) -> "LaurentPoly":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, hi + 1)])

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "LaurentPoly":
        return cls(exponent, [coeff])

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls(0, [c])

    def terms(self) -> dict:
        return {self.offset + k: c for k, c in enumerate(self.coeffs) if c}

    @property
    def valuation(self) -> int:
        return self.offset

    @property
    def top(self) -> int:
        return self.offset + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        return (
            isinstance(other, LaurentPoly)
            and self.offset == other.offset
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.offset, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = [f"{rat_str(c)}*z^{e}" for e, c in sorted(self.terms().items())]
        return " + ".join(parts)

    def __add__(self, other):
        other = _as_laurent(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.offset, other.offset)
        hi = max(self.top, other.top)
        out = [0] * (hi - lo + 1)
        for src in (self, other):
            base = src.offset - lo
            for k, c in enumerate(src.coeffs):
                out[base + k] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.offset, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return LaurentPoly(self.offset + other.offset, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials have Laurent inverses")
            return LaurentPoly(self.offset * k, [Fraction(self.coeffs[0]) ** k])
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def substitute_power(self, p: int) -> "LaurentPoly":
        """``f(z) -> f(z^p)`` for a nonzero integer ``p``."""
        return LaurentPoly.from_terms({e * p: c for e, c in self.terms().items()})

    def __call__(self, x):
        return sum((c * x**e for e, c in self.terms().items()), 0)


def _as_laurent(x) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly.const(x)


def qnum(m: int, power: int = 1) -> LaurentPoly:
    """The z-number ``[m]_{z^power} = (z^{pm} - z^{-pm}) / (z^p - z^{-p})``."""
    if power == 0:
        raise ValueError("z-numbers need a nonzero power")
    if m == 0:
        return LaurentPoly()
    sign = 1 if m > 0 else -1
    k = abs(m)
    terms = {power * (k - 1 - 2 * s): sign for s in range(k)}
    return LaurentPoly.from_terms(terms)


# -- truncated power series ----------------------------------------------------


class TruncSeries:
    """Power series ``c_0 + c_1 z + ...`` modulo ``z^order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 1:
            raise ValueError("series order must be positive")
        coeffs = list(coeffs)[:order]
        coeffs += [0] * (order - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_laurent(cls, f: LaurentPoly, order: int) -> "TruncSeries":
        terms = f.terms()
        if terms and min(terms) < 0:
            raise ValueError("Laurent polynomial has negative powers")
        return cls(order, [terms.get(k, 0) for k in range(order)])

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncSeries({self.order}, {[rat_str(c) for c in self.coeffs]})"

    def _order_with(self, other) -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries(self.order, [other])
        n = self._order_with(other)
        return TruncSeries(n, (a + b for a, b in zip(self.coeffs[:n], other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, (-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries(self.order, (c * other for c in self.coeffs))
        n = self._order_with(other)
        out = [0] * n
        for i in range(n):
            a = self.coeffs[i]
            if a:
                for j in range(n - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncSeries(n, out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not a unit")
        inv0 = Fraction(1) / c0
        out = [inv0]
        for k in range(1, self.order):
            acc = sum(self.coeffs[j] * out[k - j] for j in range(1, k + 1))
            out.append(_normalize(-acc * inv0))
        return TruncSeries(self.order, out)


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _det(matrix, rows, cols, memo) -> LaurentPoly:
    """Laplace expansion along the first remaining row, memoized on columns."""
    if not rows:
        return LaurentPoly.const(1)
    key = (rows, cols)
    if key in memo:
        return memo[key]
    r, rest = rows[0], rows[1:]
    total = LaurentPoly()
    for pos, c in enumerate(cols):
        entry = matrix[r][c]
        if entry:
            minor = _det(matrix, rest, cols[:pos] + cols[pos + 1:], memo)
            if minor:
                term = entry * minor
                total = total + (term if pos % 2 == 0 else -term)
    memo[key] = total
    return total


def laurent_det(matrix) -> LaurentPoly:
    n = len(matrix)
    return _det(matrix, tuple(range(n)), tuple(range(n)), {})


def adjugate(matrix) -> list:
    n = len(matrix)
    adj = [[LaurentPoly()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows = tuple(k for k in range(n) if k != j)
            cols = tuple(k for k in range(n) if k != i)
            minor = _det(matrix, rows, cols, {})
            adj[i][j] = minor if (i + j) % 2 == 0 else -minor
    return adj


def series_matrix_inverse(matrix, order: int) -> list:
    """Expand the inverse of a Laurent-polynomial matrix at ``z = 0``.

    Returns an n x n list of TruncSeries holding ``z^0 .. z^(order-1)``.
    Raises ValueError if some entry of the inverse has a pole at zero.
    """
    matrix = [[_as_laurent(x) for x in row] for row in matrix]
    det = laurent_det(matrix)
    if det.is_zero():
        raise SingularMatrix("determinant vanishes identically")
    adj = adjugate(matrix)
    k = det.valuation
    lowest = min((e.valuation for row in adj for e in row if e), default=0) - k
    # entry = z^(-k) adj / unit, expanded from z^lowest up to z^(order-1)
    span = order - min(lowest, 0)
    unit = TruncSeries(span, det.coeffs).inverse()
    out = []
    for row in adj:
        out_row = []
        for entry in row:
            coeffs = [0] * span
            for e, c in entry.terms().items():
                start = e - k - min(lowest, 0)
                for t in range(span - start):
                    coeffs[start + t] += c * unit.coeffs[t]
            shift = -min(lowest, 0)
            if any(coeffs[:shift]):
                raise ValueError("inverse has a pole at z = 0")
            out_row.append(TruncSeries(order, (_normalize(c) for c in coeffs[shift:])))
        out.append(out_row)
    return out


# -- monic rational functions by roots -----------------------------------------


class RootMultiset:
    """Monic rational function ``prod_a (u - a)^m_a`` with rational roots.

    Immutable; zero multiplicities are never stored.  The empty multiset is
    the constant function 1.
    """

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping | Iterable = ()):
        if isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = entries
        acc: dict = {}
        for root, mult in items:
            if not isinstance(mult, int) or isinstance(mult, bool):
                raise TypeError(f"multiplicity must be an int, got {mult!r}")
            root = rat(root)
            acc[root] = acc.get(root, 0) + mult
        self._entries = {a: m for a, m in sorted(acc.items()) if m}
        self._hash = None

    @classmethod
    def from_roots(cls, roots: Iterable) -> "RootMultiset":
        return cls((a, 1) for a in roots)

    def items(self):
        return self._entries.items()

    def roots(self):
        return self._entries.keys()

    def mult(self, a) -> int:
        return self._entries.get(rat(a), 0)

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        return isinstance(other, RootMultiset) and self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._entries.items()))
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{rat_str(a)}: {m}" for a, m in self._entries.items())
        return f"RootMultiset({{{inner}}})"

    @property
    def degree(self) -> int:
        return sum(self._entries.values())

    def __mul__(self, other: "RootMultiset") -> "RootMultiset":
        out = dict(self._entries)
        for a, m in other._entries.items():
            out[a] = out.get(a, 0) + m
        return RootMultiset(out)

    def inverse(self) -> "RootMultiset":
        return RootMultiset({a: -m for a, m in self._entries.items()})

    def __truediv__(self, other: "RootMultiset") -> "RootMultiset":
        return self * other.inverse()

    def __pow__(self, k: int) -> "RootMultiset":
        return RootMultiset({a: k * m for a, m in self._entries.items()})

    def shift(self, c) -> "RootMultiset":
        """Represents ``u -> f(u - c)``: every root moves by ``+c``."""
        c = rat(c)
        if not c:
            return self
        return RootMultiset({a + c: m for a, m in self._entries.items()})

    def is_polynomial(self) -> bool:
        return all(m > 0 for m in self._entries.values())

    def zeros(self) -> frozenset:
        return frozenset(a for a, m in self._entries.items() if m > 0)

    def poles(self) -> frozenset:
        return frozenset(a for a, m in self._entries.items() if m < 0)

    def expand(self) -> Poly:
        if not self.is_polynomial():
            raise NotPolynomial(f"{self!r} has negative multiplicities")
        out = Poly.const(1)
        for a, m in self._entries.items():
            out = out * (Poly((-a, 1)) ** m)
        return out


ONE = RootMultiset()


def rm_shift(f: RootMultiset, c) -> RootMultiset:
    return f.shift(c)


def rm_mul(f: RootMultiset, g: RootMultiset) -> RootMultiset:
    return f * g


def rm_inv(f: RootMultiset) -> RootMultiset:
    return f.inverse()


def rm_is_polynomial(f: RootMultiset) -> bool:
    return f.is_polynomial()


def rm_zeros(f: RootMultiset) -> frozenset:
    return f.zeros()


def rm_expand(f: RootMultiset) -> Poly:
    return f.expand()


@dataclass(frozen=True)
class GlobalParams:
    hbar: Fraction = Fraction(1)

    def __post_init__(self):
        h = rat(self.hbar)
        if not h:
            raise ValueError("hbar must be nonzero")
        object.__setattr__(self, "hbar", h)


# -- small dense matrices over any commutative ring ---------------------------


def mat_identity(n: int, one=1, zero=0) -> tuple:
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_mul(x, y) -> tuple:
    cols = list(zip(*y))
    out = []
    for row in x:
        nz = [(k, a) for k, a in enumerate(row) if a]
        out.append(
            tuple(sum((a * col[k] for k, a in nz), 0 * col[0]) for col in cols)
        )
    return tuple(out)


def mat_add(x, y) -> tuple:
    return tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(x, y))


def mat_sub(x, y) -> tuple:
    return tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(x, y))


def mat_product(mats, n: int, one=1, zero=0) -> tuple:
    out = mat_identity(n, one, zero)
    for m in mats:
        out = mat_mul(out, m)
    return out
