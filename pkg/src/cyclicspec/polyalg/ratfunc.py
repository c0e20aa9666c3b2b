"""The rational function field k(x), used for lattice arithmetic inside
L ⊗ Frac(k[x]). Elements are reduced pairs (num, den) with den monic."""

from __future__ import annotations

from .poly import Poly, PolyRing, poly_gcd, poly_ring


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        self.num = num
        self.den = den

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.degree() == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"


class RationalFunctionField:
    is_field = True

    def __init__(self, R: PolyRing):
        self.R = R
        self.zero = RatFunc(R.zero, R.one)
        self.one = RatFunc(R.one, R.one)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.R == self.R

    def __hash__(self):
        return hash(("Frac", self.R))

    def __repr__(self):
        return f"Frac({self.R!r})"

    @property
    def field(self):
        return self.R.field

    @property
    def characteristic(self):
        return self.R.characteristic

    def make(self, num: Poly, den: Poly) -> RatFunc:
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return self.zero
        g = poly_gcd(num, den)
        if g.degree() > 0:
            num, den = num.divmod(g)[0], den.divmod(g)[0]
        lc_inv = self.R.base.inv(den.lc)
        return RatFunc(num.scale(lc_inv), den.scale(lc_inv))

    def convert(self, value) -> RatFunc:
        if isinstance(value, RatFunc):
            return value
        return RatFunc(self.R.convert(value), self.R.one)

    def add(self, a, b):
        if a.den == b.den:
            return self.make(a.num + b.num, a.den)
        return self.make(a.num * b.den + b.num * a.den, a.den * b.den)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        return RatFunc(-a.num, a.den)

    def mul(self, a, b):
        if a.num.is_zero() or b.num.is_zero():
            return self.zero
        return self.make(a.num * b.num, a.den * b.den)

    def inv(self, a):
        if a.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return self.make(a.den, a.num)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a.num.is_zero()

    def eq(self, a, b) -> bool:
        return a.num == b.num and a.den == b.den

    def is_unit(self, a) -> bool:
        return not a.num.is_zero()

    def unit_inverse(self, a):
        return self.inv(a)

    def is_polynomial(self, a) -> bool:
        return a.den.degree() == 0

    def to_poly(self, a) -> Poly:
        if a.den.degree() != 0:
            raise ArithmeticError(f"{a} is not a polynomial")
        return a.num


def fraction_field(field, var: str = "x") -> RationalFunctionField:
    return RationalFunctionField(poly_ring(field, var))
