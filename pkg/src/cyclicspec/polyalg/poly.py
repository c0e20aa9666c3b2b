"""Dense univariate polynomials over a field or over another polynomial ring.

``PolyRing(QQ, "x")`` is k[x]; ``PolyRing(PolyRing(QQ, "x"), "t")`` is k[x][t].
A ``Poly`` stores its coefficients in ascending degree as a tuple with no
trailing zeros. Arithmetic on coefficients is delegated to ``ring.base`` so the
same code serves both levels.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import VariableMismatch


class PolyRing:
    is_field = False

    def __init__(self, base, var: str):
        self.base = base
        self.var = var
        self.zero = Poly(self, ())
        self.one = Poly(self, (base.one,))

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.var == self.var and other.base == self.base

    def __hash__(self):
        return hash((self.var, self.base))

    def __repr__(self):
        return f"{self.base!r}[{self.var}]"

    @property
    def field(self):
        return self.base.field

    @property
    def characteristic(self):
        return self.base.characteristic

    @property
    def gen(self) -> Poly:
        return Poly(self, (self.base.zero, self.base.one))

    @property
    def vars(self) -> tuple[str, ...]:
        inner = self.base.vars if isinstance(self.base, PolyRing) else ()
        return inner + (self.var,)

    def __call__(self, coeffs) -> Poly:
        return self.convert(coeffs)

    def convert(self, value) -> Poly:
        if isinstance(value, Poly):
            if value.ring == self:
                return value
            if value.ring == self.base:
                return Poly(self, (value,))
            raise VariableMismatch(f"cannot use {value.ring!r} element in {self!r}")
        if isinstance(value, (list, tuple)):
            return Poly(self, tuple(self.base.convert(c) for c in value))
        return Poly(self, (self.base.convert(value),))

    def monomial(self, coeff, deg: int) -> Poly:
        return Poly(self, (self.base.zero,) * deg + (self.base.convert(coeff),))

    # ring interface used by generic matrix code
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return not a.coeffs

    def eq(self, a, b) -> bool:
        return a == b

    def is_unit(self, a) -> bool:
        return a.degree() == 0 and self.base.is_unit(a.coeffs[0])

    def unit_inverse(self, a) -> Poly:
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{a} is not a unit of {self!r}")
        return Poly(self, (self.base.unit_inverse(a.coeffs[0]),))

    def pow(self, a, n: int):
        r = self.one
        while n:
            if n & 1:
                r = r * a
            a = a * a
            n >>= 1
        return r


@lru_cache(maxsize=None)
def poly_ring(base, var: str) -> PolyRing:
    return PolyRing(base, var)


def _foreign(value) -> bool:
    """Objects (module elements, matrices) that implement their own scalar action."""
    return hasattr(value, "__rmul__") and hasattr(value, "ring") and not isinstance(value, Poly)


class Poly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PolyRing, coeffs):
        base = ring.base
        coeffs = list(coeffs)
        while coeffs and base.is_zero(coeffs[-1]):
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    # -- basic queries -------------------------------------------------
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.ring.base.zero

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ring.base.zero

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.ring.base.eq(self.coeffs[-1], self.ring.base.one)

    def valuation(self) -> int:
        """Largest v with var^v dividing self (-1 for zero)."""
        base = self.ring.base
        for k, c in enumerate(self.coeffs):
            if not base.is_zero(c):
                return k
        return -1

    def __eq__(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                if other.ring == self.ring.base or self.ring == other.ring.base:
                    return _lift(self, other) == _lift(other, self)
                return False
            base = self.ring.base
            return len(self.coeffs) == len(other.coeffs) and all(
                base.eq(a, b) for a, b in zip(self.coeffs, other.coeffs))
        try:
            return self == self.ring.convert(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring.var, self.coeffs))

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring == self.ring:
                return other
            if other.ring == self.ring.base:
                return Poly(self.ring, (other,))
            raise VariableMismatch(f"{self.ring!r} vs {other.ring!r}")
        return self.ring.convert(other)

    def __add__(self, other):
        if _foreign(other):
            return NotImplemented
        if isinstance(other, Poly) and other.ring != self.ring and self.ring == other.ring.base:
            return other + self
        other = self._coerce(other)
        add = self.ring.base.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.base.neg
        return Poly(self.ring, [neg(c) for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, Poly) and other.ring != self.ring and self.ring == other.ring.base:
            return (-other) + self
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if _foreign(other):
            return NotImplemented
        if isinstance(other, Poly) and other.ring != self.ring and self.ring == other.ring.base:
            return other * self
        if not isinstance(other, Poly) or other.ring != self.ring:
            other = self._coerce(other)
            if len(other.coeffs) == 1:
                return self.scale(other.coeffs[0])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.ring.zero
        base = self.ring.base
        mul, add = base.mul, base.add
        out = [base.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if base.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return self.ring.pow(self, n)

    def scale(self, c) -> Poly:
        mul = self.ring.base.mul
        return Poly(self.ring, [mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> Poly:
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        return Poly(self.ring, (self.ring.base.zero,) * k + self.coeffs)

    def map_coeffs(self, fn, ring: PolyRing | None = None) -> Poly:
        ring = ring or self.ring
        return Poly(ring, [fn(c) for c in self.coeffs])

    # -- division ------------------------------------------------------
    def divmod(self, other) -> tuple[Poly, Poly]:
        """Division with remainder; the divisor's leading coefficient must be a unit."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        base = self.ring.base
        inv_lc = base.unit_inverse(other.lc)
        rem = list(self.coeffs)
        db = other.degree()
        if len(rem) <= db:
            return self.ring.zero, self
        quo = [base.zero] * (len(rem) - db)
        for k in range(len(rem) - db - 1, -1, -1):
            c = rem[k + db]
            if base.is_zero(c):
                continue
            q = base.mul(c, inv_lc)
            quo[k] = q
            for j, bj in enumerate(other.coeffs):
                rem[k + j] = base.sub(rem[k + j], base.mul(q, bj))
        return Poly(self.ring, quo), Poly(self.ring, rem[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other) -> Poly:
        """Quotient of an exact division; works over k or k[x] coefficients."""
        other = self._coerce(other)
        base = self.ring.base
        if base.is_unit(other.lc):
            q, r = self.divmod(other)
            if r:
                raise ArithmeticError(f"{other} does not divide {self}")
            return q
        # coefficient ring is itself a polynomial ring: long division with exact lc division
        rem = list(self.coeffs)
        db = other.degree()
        if len(rem) <= db:
            if rem:
                raise ArithmeticError(f"{other} does not divide {self}")
            return self.ring.zero
        quo = [base.zero] * (len(rem) - db)
        for k in range(len(rem) - db - 1, -1, -1):
            c = rem[k + db]
            if base.is_zero(c):
                continue
            q = c.exact_div(other.lc)
            quo[k] = q
            for j, bj in enumerate(other.coeffs):
                rem[k + j] = base.sub(rem[k + j], base.mul(q, bj))
        if any(not base.is_zero(c) for c in rem):
            raise ArithmeticError(f"{other} does not divide {self}")
        return Poly(self.ring, quo)

    def divides(self, other) -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self.scale(self.ring.base.unit_inverse(self.lc))

    # -- calculus / evaluation ----------------------------------------
    def derivative(self) -> Poly:
        base = self.ring.base
        return Poly(self.ring, [base.mul(base.convert(k), c) for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, value):
        """Horner evaluation. ``value`` may be a base element or anything the
        base ring can multiply with (e.g. a Poly in a ring containing base)."""
        base = self.ring.base
        if isinstance(value, Poly) and value.ring != base:
            acc = value.ring.zero
            for c in reversed(self.coeffs):
                acc = acc * value + c
            return acc
        acc = base.zero
        for c in reversed(self.coeffs):
            acc = base.add(base.mul(acc, value), c)
        return acc

    def evaluate(self, value):
        return self(value)

    # -- printing ------------------------------------------------------
    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        base = self.ring.base
        v = self.ring.var
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if base.is_zero(c):
                continue
            cs = str(c) if isinstance(c, Poly) else base.to_str(c)
            if isinstance(c, Poly) and len([a for a in c.coeffs if not c.ring.base.is_zero(a)]) > 1:
                cs = f"({cs})"
            mono = "" if k == 0 else (v if k == 1 else f"{v}^{k}")
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)


def _lift(a: Poly, b: Poly) -> Poly:
    if a.ring == b.ring.base:
        return Poly(b.ring, (a,))
    return a


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd of two polynomials over a field. ``gcd(0, 0) = 0``."""
    if f.ring != g.ring:
        raise VariableMismatch(f"gcd of {f.ring!r} and {g.ring!r}")
    if not f.ring.base.is_field:
        raise TypeError("poly_gcd needs field coefficients; use gcd_over_fraction_field")
    while g:
        f, g = g, f.divmod(g)[1]
    return f.monic()


def poly_xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (d, u, v) with u*f + v*g = d monic."""
    R = f.ring
    r0, r1 = f, g
    s0, s1 = R.one, R.zero
    t0, t1 = R.zero, R.one
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = R.base.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return f.ring.zero
    return (f * g).divmod(poly_gcd(f, g))[0].monic()


def squarefree_part(f: Poly) -> Poly:
    """f / gcd(f, f'), monic; over a field."""
    if not f:
        return f
    d = f.derivative()
    if not d:
        return f.monic()
    return f.divmod(poly_gcd(f, d))[0].monic()


# ---------------------------------------------------------------- k[x][t]

def content(f: Poly) -> Poly:
    """Monic gcd of the k[x]-coefficients of f in k[x][t]."""
    R = f.ring.base
    g = R.zero
    for c in f.coeffs:
        g = poly_gcd(g, c)
        if g.degree() == 0:
            break
    return g


def primitive_part(f: Poly) -> Poly:
    if not f:
        return f
    c = content(f)
    g = f.map_coeffs(lambda a: a.exact_div(c))
    # normalise the leading k[x]-coefficient to be monic
    return g.map_coeffs(lambda a: a.scale(g.ring.base.base.inv(g.lc.lc)))


def pseudo_rem(f: Poly, g: Poly) -> Poly:
    """lc(g)^(deg f - deg g + 1) * f mod g, computed without division."""
    if g.is_zero():
        raise ZeroDivisionError
    df, dg = f.degree(), g.degree()
    if df < dg:
        return f
    lc = g.lc
    r = f
    for _ in range(df - dg + 1):
        if r.degree() < dg:
            r = r * lc
            continue
        shift = r.degree() - dg
        r = r * lc - (g * r.lc).shift(shift)
    return r


def gcd_over_fraction_field(f: Poly, g: Poly) -> Poly:
    """Primitive gcd in k[x][t], i.e. the gcd over k(x) cleared of denominators."""
    if f.ring != g.ring:
        raise VariableMismatch(f"gcd of {f.ring!r} and {g.ring!r}")
    if not f:
        return primitive_part(g)
    if not g:
        return primitive_part(f)
    a, b = primitive_part(f), primitive_part(g)
    if a.degree() < b.degree():
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive_part(r) if r else r
    return primitive_part(a)


def squarefree_part_over_fraction_field(f: Poly) -> Poly:
    """Squarefree part in t of f in k[x][t] (computed over k(x), made primitive)."""
    d = f.derivative()
    if not d:
        return primitive_part(f)
    g = gcd_over_fraction_field(f, d)
    if g.degree() == 0:
        return primitive_part(f)
    return primitive_part(f).exact_div(g)


def partial_x(f: Poly) -> Poly:
    """d/dx of an element of k[x][t]."""
    return f.map_coeffs(lambda a: a.derivative())


def evaluate_x(f: Poly, x0, ring_t: PolyRing | None = None) -> Poly:
    """Substitute x = x0 in f in k[x][t], returning a polynomial in t over k."""
    ring_t = ring_t or poly_ring(f.ring.base.base, f.ring.var)
    return Poly(ring_t, [a(x0) for a in f.coeffs])
