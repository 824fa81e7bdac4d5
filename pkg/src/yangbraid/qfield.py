"""The rational function field Q(q), with q a formal variable."""

from __future__ import annotations

from fractions import Fraction

from .exact import LaurentPoly, Poly, poly_gcd, qnum, rat_str


class QFrac:
    """Reduced fraction ``num / den`` of polynomials in q, ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, *, reduced: bool = False):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = den if isinstance(den, Poly) else Poly.const(den)
        if not den:
            raise ZeroDivisionError("zero denominator in Q(q)")
        if not num:
            num, den = Poly(), Poly.const(1)
        elif not reduced:
            if den.degree > 0:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num.divmod(g)[0], den.divmod(g)[0]
            lead = den.lead
            if lead != 1:
                num = Poly(c / lead for c in num.coeffs)
                den = Poly(c / lead for c in den.coeffs)
        self.num = num
        self.den = den

    @classmethod
    def q(cls, k: int = 1) -> "QFrac":
        """The monomial ``q^k`` for any integer ``k``."""
        if k >= 0:
            return cls(Poly([0] * k + [1]), reduced=True)
        return cls(1, Poly([0] * -k + [1]), reduced=True)

    @classmethod
    def from_laurent(cls, f: LaurentPoly) -> "QFrac":
        if not f:
            return cls()
        if f.offset >= 0:
            return cls(Poly([0] * f.offset + list(f.coeffs)), reduced=True)
        return cls(Poly(f.coeffs), Poly([0] * -f.offset + [1]))

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        def show(p):
            terms = [f"{rat_str(c)}*q^{k}" for k, c in enumerate(p.coeffs) if c]
            return " + ".join(terms) or "0"

        if self.den == 1:
            return f"QFrac({show(self.num)})"
        return f"QFrac(({show(self.num)}) / ({show(self.den)}))"

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return QFrac(self.num + other.num, self.den)
        return QFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QFrac(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return QFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QFrac":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return QFrac(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        out = QFrac(1)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_laurent(self) -> bool:
        """Is the denominator a power of q?"""
        return all(not c for c in self.den.coeffs[:-1])


def _coerce(x):
    if isinstance(x, QFrac):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return QFrac(x)
    return NotImplemented


def q_power(k: int) -> QFrac:
    return QFrac.q(k)


def q_number(m: int, power: int) -> QFrac:
    """``[m]`` evaluated at ``q^power``, as an element of Q(q)."""
    return QFrac.from_laurent(qnum(m, power))
