"""Exact ground fields: the rationals and prime fields F_p.

Elements are plain Python values (``Fraction`` for Q, ``int`` in ``[0, p)``
for F_p); all arithmetic goes through the field object so that callers never
have to know which representation is in play.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface. Subclasses define the element representation."""

    characteristic: int = 0
    is_field = True

    @property
    def field(self):
        return self

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_unit(self, a) -> bool:
        return not self.is_zero(a)

    def unit_inverse(self, a):
        return self.inv(a)

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        r = self.one
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r


class Rationals(Field):
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def __call__(self, value) -> Fraction:
        return self.convert(value)

    def convert(self, value) -> Fraction:
        if isinstance(value, str):
            return Fraction(value.strip())
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in QQ")
        return 1 / a

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        return a == b

    def to_str(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def from_str(self, s: str) -> Fraction:
        return Fraction(s.strip())

    def to_json(self) -> dict:
        return {"type": "Q"}


class PrimeField(Field):
    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def __call__(self, value) -> int:
        return self.convert(value)

    def convert(self, value) -> int:
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def eq(self, a, b) -> bool:
        return (a - b) % self.p == 0

    def elements(self):
        return range(self.p)

    def to_str(self, a) -> str:
        return str(a % self.p)

    def from_str(self, s: str) -> int:
        s = s.strip()
        if "/" in s:
            return self.convert(Fraction(s))
        v = int(s)
        if not 0 <= v < self.p:
            raise ValueError(f"{s} is not a canonical residue mod {self.p}")
        return v

    def to_json(self) -> dict:
        return {"type": "Fp", "p": self.p}


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


DEFAULT_PRIME = 10007


def field_from_json(obj) -> Field:
    kind = obj.get("type")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return GF(int(obj["p"]))
    raise ValueError(f"unknown field descriptor {obj!r}")


def parse_field(spec: str) -> Field:
    """Parse a command-line field name: ``Q``, ``Fp`` (= F_10007), ``F7``, ``GF(7)``."""
    s = spec.strip().replace(" ", "")
    if s.upper() in ("Q", "QQ"):
        return QQ
    if s in ("Fp", "FP", "GF"):
        return GF(DEFAULT_PRIME)
    for prefix in ("GF(", "F"):
        if s.upper().startswith(prefix):
            body = s[len(prefix):].rstrip(")")
            return GF(int(body))
    raise ValueError(f"unrecognised field {spec!r}")
