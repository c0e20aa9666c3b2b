"""The central reduction Â(m): a free R[t]-algebra of rank m^2, R = k[x].

Basis symbol b(i, j) is the class of the unique path v_j -> v_i of length
(i - j) mod m. Loops are identified with t, so

    b(i, j) * b(j, k) = t^w b(i, k),   w = 1 iff len(i,j) + len(j,k) >= m,

and b(i, j) * b(j', k) = 0 for j != j'.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .errors import PreconditionError
from .polyalg import linalg
from .polyalg.poly import Poly, PolyRing, poly_ring


def basis_length(m: int, i: int, j: int) -> int:
    return (i - j) % m


def wrap(m: int, i: int, j: int, k: int) -> int:
    """Power of t produced by b(i,j) * b(j,k)."""
    total = basis_length(m, i, j) + basis_length(m, j, k)
    assert total < 2 * m, "two short paths always sum to less than 2m"
    return 1 if total >= m else 0


def basis_symbols(m: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(m) for j in range(m)]


def index_of(m: int, i: int, j: int) -> int:
    return i * m + j


def rank_check(m: int) -> int:
    if m < 1:
        raise ValueError("m must be positive")
    return len(basis_symbols(m))


def rt_ring(field) -> PolyRing:
    return poly_ring(poly_ring(field, "x"), "t")


class ReducedElement:
    """Element of Â(m): coefficients in R[t] on the basis b(i, j)."""

    __slots__ = ("m", "ring", "coeffs")

    def __init__(self, m: int, ring: PolyRing, coeffs=None):
        self.m = m
        self.ring = ring
        clean = {}
        for (i, j), c in (coeffs or {}).items():
            c = ring.convert(c)
            if c:
                clean[(i % m, j % m)] = clean[(i % m, j % m)] + c if (i % m, j % m) in clean else c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def basis(cls, m: int, i: int, j: int, ring: PolyRing) -> ReducedElement:
        return cls(m, ring, {(i, j): ring.one})

    @classmethod
    def unit(cls, m: int, ring: PolyRing) -> ReducedElement:
        return cls(m, ring, {(j, j): ring.one for j in range(m)})

    def coeff(self, i: int, j: int) -> Poly:
        return self.coeffs.get((i, j), self.ring.zero)

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return ReducedElement(self.m, self.ring, out)

    def __neg__(self):
        return ReducedElement(self.m, self.ring, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ReducedElement):
            return reduced_multiply(self, other)
        c = self.ring.convert(other)
        return ReducedElement(self.m, self.ring, {k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, other):
        c = self.ring.convert(other)
        return ReducedElement(self.m, self.ring, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, ReducedElement) and self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other):
        if other.m != self.m:
            raise PreconditionError(f"mismatched m: {self.m} vs {other.m}")

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*b{i}{j}" for (i, j), c in sorted(self.coeffs.items()))


def reduced_multiply(a: ReducedElement, b: ReducedElement) -> ReducedElement:
    a._check(b)
    m = a.m
    t = a.ring.gen
    out: dict[tuple[int, int], Poly] = {}
    for (i, j), ca in a.coeffs.items():
        for (j2, k), cb in b.coeffs.items():
            if j != j2:
                continue
            c = ca * cb
            if wrap(m, i, j, k):
                c = c * t
            out[(i, k)] = out[(i, k)] + c if (i, k) in out else c
    return ReducedElement(m, a.ring, out)


# ------------------------------------------------------------------ fibers

@dataclass
class FiberAlgebra:
    """A finite-dimensional k-algebra given by structure constants.

    ``table[a][b]`` is the coefficient vector of (basis a) * (basis b).
    For fibers of Â(m) the basis is b(i, j) in the order of
    :func:`basis_symbols`.
    """

    m: int
    x0: object
    t0: object
    field: object
    table: list
    labels: list = dc_field(default_factory=list)
    unit: list | None = None

    @property
    def dim(self) -> int:
        return len(self.table)

    def multiply(self, u, v) -> list:
        F = self.field
        n = self.dim
        out = [F.zero] * n
        for a in range(n):
            if F.is_zero(u[a]):
                continue
            for b in range(n):
                if F.is_zero(v[b]):
                    continue
                s = F.mul(u[a], v[b])
                row = self.table[a][b]
                for c in range(n):
                    if not F.is_zero(row[c]):
                        out[c] = F.add(out[c], F.mul(s, row[c]))
        return out

    def basis_vector(self, a: int) -> list:
        F = self.field
        return [F.one if k == a else F.zero for k in range(self.dim)]

    def left_matrix(self, a: int) -> list[list]:
        """Matrix (acting on column vectors) of left multiplication by basis a."""
        n = self.dim
        return [[self.table[a][b][c] for b in range(n)] for c in range(n)]

    def right_matrix(self, a: int) -> list[list]:
        n = self.dim
        return [[self.table[b][a][c] for b in range(n)] for c in range(n)]

    def is_associative(self) -> bool:
        n = self.dim
        for a, b, c in product(range(n), repeat=3):
            ab = self.table[a][b]
            bc = self.table[b][c]
            lhs = self.multiply(ab, self.basis_vector(c))
            rhs = self.multiply(self.basis_vector(a), bc)
            if any(not self.field.eq(x, y) for x, y in zip(lhs, rhs)):
                return False
        return True

    def is_unital(self) -> bool:
        if self.unit is None:
            return False
        F = self.field
        for a in range(self.dim):
            e = self.basis_vector(a)
            if any(not F.eq(x, y) for x, y in zip(self.multiply(self.unit, e), e)):
                return False
            if any(not F.eq(x, y) for x, y in zip(self.multiply(e, self.unit), e)):
                return False
        return True

    def to_json(self) -> list:
        return [[[self.field.to_str(c) for c in vec] for vec in row] for row in self.table]


def fiber_at(m: int, x0, t0, field) -> FiberAlgebra:
    """Evaluate the structure constants of Â(m) at (x0, t0)."""
    x0, t0 = field.convert(x0), field.convert(t0)
    syms = basis_symbols(m)
    n = len(syms)
    table = []
    for (i, j) in syms:
        row = []
        for (j2, k) in syms:
            vec = [field.zero] * n
            if j == j2:
                vec[index_of(m, i, k)] = t0 if wrap(m, i, j, k) else field.one
            row.append(vec)
        table.append(row)
    unit = [field.one if i == j else field.zero for (i, j) in syms]
    labels = [f"b({i},{j})" for (i, j) in syms]
    return FiberAlgebra(m, x0, t0, field, table, labels, unit)


@dataclass
class MatrixIso:
    m: int
    s0: object
    images: dict          # (i, j) -> scalar multiple of E(i, j)
    verified: bool
    failures: list


def matrix_iso(f: FiberAlgebra, s0) -> MatrixIso:
    """Map b(i,j) -> s0^((i-j) mod m) E(i,j) and check it on all m^4 products."""
    F, m = f.field, f.m
    s0 = F.convert(s0)
    if F.is_zero(f.t0):
        raise PreconditionError("t0 = 0: the fiber lies over the zero section, no matrix isomorphism")
    if not F.eq(F.pow(s0, m), f.t0):
        raise PreconditionError(f"s0^{m} != t0")
    scal = {(i, j): F.pow(s0, basis_length(m, i, j)) for (i, j) in basis_symbols(m)}
    failures = []
    syms = basis_symbols(m)
    for (i, j), (k, l) in product(syms, repeat=2):
        prod_vec = f.table[index_of(m, i, j)][index_of(m, k, l)]
        # image of the product under the map: sum_c coeff_c * scal_c E(c)
        lhs = {c: F.mul(v, scal[c]) for c, v in zip(syms, prod_vec) if not F.is_zero(v)}
        # product of images: E(i,j) E(k,l) = delta_jk E(i,l)
        rhs = {}
        if j == k:
            rhs[(i, l)] = F.mul(scal[(i, j)], scal[(k, l)])
        if lhs.keys() != rhs.keys() or any(not F.eq(lhs[c], rhs[c]) for c in lhs):
            failures.append(((i, j), (k, l)))
    return MatrixIso(m, s0, scal, not failures, failures)


def mth_roots(t0, m: int, field) -> list:
    """All s in a prime field with s^m = t0 (exhaustive scan)."""
    if not hasattr(field, "elements"):
        raise PreconditionError("root search is only offered over prime fields")
    t0 = field.convert(t0)
    return [s for s in field.elements() if field.eq(field.pow(s, m), t0)]


def ideal_closure(f: FiberAlgebra, vector) -> list[list]:
    """Basis of the two-sided ideal generated by ``vector``."""
    F, n = f.field, f.dim
    span = linalg.span_basis([vector], n, F)
    if not span:
        return []
    ops = [f.left_matrix(a) for a in range(n)] + [f.right_matrix(a) for a in range(n)]
    while True:
        new = list(span)
        for M in ops:
            images = linalg.matmul(span, [list(r) for r in zip(*M)], F)   # rows: (M v)^T
            new.extend(images)
        nb = linalg.span_basis(new, n, F)
        if len(nb) == len(span):
            return nb
        span = nb


def simplicity_check(f: FiberAlgebra, elements=None) -> bool:
    """True iff each given element generates the whole algebra as a two-sided ideal.

    With ``elements=None`` the basis elements are used. For a fiber of Â(m)
    every Peirce component e_i A e_j is spanned by one basis element, and any
    nonzero ideal contains a nonzero Peirce component, so this decides simplicity.
    """
    n = f.dim
    if elements is None:
        elements = [f.basis_vector(a) for a in range(n)]
    for v in elements:
        if all(f.field.is_zero(c) for c in v):
            continue
        if len(ideal_closure(f, v)) != n:
            return False
    return True


# ------------------------------------------------------------------ center of Â(m)

def reduced_center_check(m: int, field, x_cap: int = 2, t_cap: int = 2) -> bool:
    """Solve z*b = b*z for all basis b, z with coefficient degrees within the caps;
    true iff the solutions are exactly R[t]-multiples of the unit."""
    syms = basis_symbols(m)
    monos = [(dx, dt) for dx in range(x_cap + 1) for dt in range(t_cap + 1)]
    unknowns = [(s, mono) for s in syms for mono in monos]
    col = {u: k for k, u in enumerate(unknowns)}
    eqs: dict[tuple, dict[int, int]] = {}

    def bump(key, column, val):
        row = eqs.setdefault(key, {})
        row[column] = row.get(column, 0) + val

    for (k, l) in syms:
        for (i, j) in syms:
            for (dx, dt) in monos:
                c = col[((i, j), (dx, dt))]
                # z_(i,j) b(i,j) * b(k,l)
                if j == k:
                    bump(((k, l), (i, l), dx, dt + wrap(m, i, j, l)), c, 1)
                # b(k,l) * z_(i,j) b(i,j)
                if l == i:
                    bump(((k, l), (k, j), dx, dt + wrap(m, k, l, j)), c, -1)
    n = len(unknowns)
    rows = []
    for row in eqs.values():
        r = [field.zero] * n
        for c, v in row.items():
            r[c] = field.convert(v)
        rows.append(r)
    null = linalg.nullspace(rows, n, field)
    units = []
    for mono in monos:
        v = [field.zero] * n
        for j in range(m):
            v[col[((j, j), mono)]] = field.one
        units.append(v)
    return linalg.spans_equal(null, units, n, field)


def associativity_exhaustive(m: int, field) -> bool:
    R = rt_ring(field)
    els = [ReducedElement.basis(m, i, j, R) for (i, j) in basis_symbols(m)]
    return all((a * b) * c == a * (b * c) for a, b, c in product(els, repeat=3))


def loop_product(m: int, i: int, ring: PolyRing) -> ReducedElement:
    """b(i,i-1) * ... * b(i+2,i+1) * b(i+1,i): the reduced image of c_i."""
    if m == 1:
        # the single arrow is already the loop c_0, which reduces to t*b(0,0)
        return ReducedElement(m, ring, {(0, 0): ring.gen})
    acc = ReducedElement.basis(m, (i + 1) % m, i, ring)
    for step in range(2, m + 1):
        acc = ReducedElement.basis(m, (i + step) % m, (i + step - 1) % m, ring) * acc
    return acc
