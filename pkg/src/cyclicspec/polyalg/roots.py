"""Roots and irreducibility of univariate polynomials over Q and F_p."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt

from .fields import PrimeField, Rationals
from .poly import Poly, poly_gcd

SCAN_LIMIT = 64          # below this prime, find roots by trying every element
DIVISOR_LIMIT = 10 ** 12  # rational root theorem gives up past this size


def powmod(a: Poly, n: int, f: Poly) -> Poly:
    """a^n mod f."""
    r = a.ring.one
    a = a % f
    while n:
        if n & 1:
            r = (r * a) % f
        a = (a * a) % f
        n >>= 1
    return r


def _frobenius_gcd(f: Poly) -> Poly:
    """gcd(f, t^p - t): the product of the distinct linear factors of f."""
    p = f.ring.base.p
    t = f.ring.gen
    return poly_gcd(f, powmod(t, p, f) - t)


def _split_linear(g: Poly, rng: random.Random) -> list:
    """Roots of a monic squarefree product of distinct linear factors over F_p."""
    F = g.ring.base
    d = g.degree()
    if d <= 0:
        return []
    if d == 1:
        return [F.neg(g.coeffs[0])]
    t = g.ring.gen
    while True:
        a = rng.randrange(F.p)
        h = poly_gcd(g, powmod(t + F.convert(a), (F.p - 1) // 2, g) - 1)
        if 0 < h.degree() < d:
            return _split_linear(h, rng) + _split_linear(g.exact_div(h), rng)


def _roots_fp(f: Poly) -> list:
    F = f.ring.base
    if F.p <= SCAN_LIMIT:
        return [a for a in F.elements() if F.is_zero(f(a))]
    g = _frobenius_gcd(f.monic())
    return sorted(_split_linear(g, random.Random(F.p)))


def _divisors(n: int) -> list[int] | None:
    n = abs(n)
    if n > DIVISOR_LIMIT:
        return None
    out = set()
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.update((d, n // d))
    return sorted(out)


def _roots_q(f: Poly) -> list | None:
    """Rational roots by the rational root theorem; None if coefficients are too big."""
    coeffs = list(f.coeffs)
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints.pop(0)
    if len(ints) <= 1:
        return roots
    num, lead = _divisors(ints[0]), _divisors(ints[-1])
    if num is None or lead is None:
        return None
    F = f.ring.base
    cand = {Fraction(s * a, b) for a in num for b in lead for s in (1, -1)}
    roots.extend(r for r in sorted(cand) if F.is_zero(f(r)))
    return roots


def roots(f: Poly) -> list | None:
    """Distinct roots of f in its ground field, sorted; None when undecided (large Q input)."""
    if f.is_zero():
        raise ValueError("roots of the zero polynomial")
    if f.degree() <= 0:
        return []
    F = f.ring.base
    if isinstance(F, PrimeField):
        return _roots_fp(f)
    if isinstance(F, Rationals):
        return _roots_q(f)
    raise TypeError(f"no root finder over {F!r}")


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_fp(f: Poly) -> bool:
    """Rabin's test over a prime field."""
    n = f.degree()
    if n <= 0:
        return False
    if n == 1:
        return True
    f = f.monic()
    q = f.ring.base.p
    t = f.ring.gen
    if powmod(t, q ** n, f) != t % f:
        return False
    for r in _prime_factors(n):
        h = powmod(t, q ** (n // r), f) - t
        if poly_gcd(f, h).degree() > 0:
            return False
    return True
