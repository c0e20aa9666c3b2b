"""Â(2) as the even Clifford algebra of a ternary quadratic form.

The form is q(a, b, c) = t a^2 + b c on k[x][t]^3, so its Gram matrix is
B = [[t, 0, 0], [0, 0, 1/2], [0, 1/2, 0]] and det(2B) = -2t vanishes exactly
on t = 0. The even Clifford algebra has basis 1, v12, v13, v23 with
vij = gi gj, and

    e0 -> v23,  e1 -> 1 - v23,  b(0,1) -> -v12,  b(1,0) -> v13

is an algebra isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product

from .errors import CharacteristicError, PreconditionError
from .polyalg import linalg
from .polyalg.matrix import Matrix, det
from .polyalg.poly import Poly, evaluate_x
from .reduction import (FiberAlgebra, ReducedElement, basis_symbols, fiber_at, rt_ring,
                        simplicity_check)

EVEN_BASIS = ((), (0, 1), (0, 2), (1, 2))
EVEN_LABELS = ("1", "v12", "v13", "v23")
ALG_BASIS = ((0, 0), (1, 1), (0, 1), (1, 0))          # e0, e1, b(0,1), b(1,0)
ALG_LABELS = ("e0", "e1", "b01", "b10")


# ------------------------------------------------------------------ trace

def _need_m2(a: ReducedElement):
    if a.m != 2:
        raise PreconditionError("the trace map is defined on the m = 2 reduction only")


def trace_map(a: ReducedElement) -> Poly:
    _need_m2(a)
    return a.coeff(0, 0) + a.coeff(1, 1)


@dataclass(frozen=True)
class TraceDecomposition:
    scalar: Poly
    traceless: ReducedElement

    def reassemble(self) -> ReducedElement:
        ring = self.traceless.ring
        half = ring.base.base.inv(ring.base.base.convert(2))
        unit = ReducedElement.unit(2, ring)
        return unit * (self.scalar * half) + self.traceless


def traceless_decompose(a: ReducedElement) -> TraceDecomposition:
    _need_m2(a)
    F = a.ring.base.base
    if F.characteristic == 2:
        raise CharacteristicError("the splitting needs 1/2")
    s = trace_map(a)
    half = F.inv(F.convert(2))
    rest = a - ReducedElement.unit(2, a.ring) * (s * half)
    return TraceDecomposition(s, rest)


def commutator_trace_check(samples=(), ring=None) -> bool:
    """Tr[a, b] = 0 on the given pairs and on all 16 basis pairs."""
    pairs = list(samples)
    if ring is None:
        if not pairs:
            raise PreconditionError("need a ring when no samples are given")
        ring = pairs[0][0].ring
    basis = [ReducedElement.basis(2, i, j, ring) for (i, j) in ALG_BASIS]
    pairs.extend(product(basis, repeat=2))
    return all(trace_map(a * b - b * a).is_zero() for a, b in pairs)


# ------------------------------------------------------------------ quadratic form

@dataclass(frozen=True)
class TernaryQuadraticForm:
    gram: Matrix      # over k[x][t]

    def __post_init__(self):
        if self.gram.shape != (3, 3) or self.gram != self.gram.transpose():
            raise PreconditionError("Gram matrix must be symmetric 3x3")

    @property
    def ring(self):
        return self.gram.ring

    def __call__(self, v) -> Poly:
        R = self.ring
        v = [R.convert(a) for a in v]
        acc = R.zero
        for i in range(3):
            for j in range(3):
                acc = acc + v[i] * self.gram[i, j] * v[j]
        return acc


def build_quadratic_form(field) -> TernaryQuadraticForm:
    if field.characteristic == 2:
        raise CharacteristicError("Clifford algebras with 1/2 need characteristic != 2")
    R = rt_ring(field)
    t = R.gen
    half = field.inv(field.convert(2))
    z = R.zero
    h = R.convert(half)
    return TernaryQuadraticForm(Matrix(R, [[t, z, z], [z, z, h], [z, h, z]], 3))


def discriminant(q: TernaryQuadraticForm) -> Poly:
    """det(2B)."""
    return det(q.gram.scale(2))


# ------------------------------------------------------------------ even Clifford algebra

def _clifford_reducer(q: TernaryQuadraticForm):
    R = q.ring
    B = q.gram
    two = R.convert(2)

    @lru_cache(maxsize=None)
    def reduce_word(word: tuple) -> tuple:
        # returns a tuple of (sorted word, coeff) pairs
        for k in range(len(word) - 1):
            i, j = word[k], word[k + 1]
            if i == j:
                out = {}
                for w, c in reduce_word(word[:k] + word[k + 2:]):
                    out[w] = out.get(w, R.zero) + c * B[i, i]
                return tuple((w, c) for w, c in out.items() if c)
            if i > j:
                # g_i g_j = -g_j g_i + 2 B_ij
                out = {}
                for w, c in reduce_word(word[:k] + (j, i) + word[k + 2:]):
                    out[w] = out.get(w, R.zero) - c
                if B[i, j]:
                    for w, c in reduce_word(word[:k] + word[k + 2:]):
                        out[w] = out.get(w, R.zero) + c * two * B[i, j]
                return tuple((w, c) for w, c in out.items() if c)
        return ((word, R.one),)

    return reduce_word


@dataclass
class EvenCliffordAlgebra:
    q: TernaryQuadraticForm
    table: list            # table[a][b] = 4-vector over k[x][t]

    @property
    def ring(self):
        return self.q.ring

    def unit(self) -> list:
        R = self.ring
        return [R.one, R.zero, R.zero, R.zero]

    def multiply(self, u, v) -> list:
        R = self.ring
        out = [R.zero] * 4
        for a in range(4):
            if not u[a]:
                continue
            for b in range(4):
                if not v[b]:
                    continue
                s = u[a] * v[b]
                for c in range(4):
                    if self.table[a][b][c]:
                        out[c] = out[c] + s * self.table[a][b][c]
        return out

    def basis_vector(self, a: int) -> list:
        R = self.ring
        return [R.one if k == a else R.zero for k in range(4)]

    def is_associative(self) -> bool:
        for a, b, c in product(range(4), repeat=3):
            ab = self.multiply(self.basis_vector(a), self.basis_vector(b))
            bc = self.multiply(self.basis_vector(b), self.basis_vector(c))
            if self.multiply(ab, self.basis_vector(c)) != self.multiply(self.basis_vector(a), bc):
                return False
        return True

    def is_unital(self) -> bool:
        one = self.unit()
        return all(self.multiply(one, self.basis_vector(a)) == self.basis_vector(a)
                   and self.multiply(self.basis_vector(a), one) == self.basis_vector(a) for a in range(4))

    def fiber(self, x0, t0) -> FiberAlgebra:
        F = self.ring.base.base
        x0, t0 = F.convert(x0), F.convert(t0)

        def ev(c: Poly):
            return evaluate_x(c, x0)(t0)

        table = [[[ev(c) for c in vec] for vec in row] for row in self.table]
        unit = [F.one, F.zero, F.zero, F.zero]
        return FiberAlgebra(2, x0, t0, F, table, list(EVEN_LABELS), unit)


def even_clifford(q: TernaryQuadraticForm) -> EvenCliffordAlgebra:
    R = q.ring
    reduce_word = _clifford_reducer(q)
    index = {w: k for k, w in enumerate(EVEN_BASIS)}
    table = []
    for u in EVEN_BASIS:
        row = []
        for v in EVEN_BASIS:
            vec = [R.zero] * 4
            for w, c in reduce_word(u + v):
                vec[index[w]] = vec[index[w]] + c
            row.append(vec)
        table.append(row)
    return EvenCliffordAlgebra(q, table)


# ------------------------------------------------------------------ the isomorphism

def candidate_images(ring) -> dict:
    one, zero = ring.one, ring.zero
    return {
        (0, 0): [zero, zero, zero, one],          # v23
        (1, 1): [one, zero, zero, -one],          # 1 - v23
        (0, 1): [zero, -one, zero, zero],         # -v12
        (1, 0): [zero, zero, one, zero],          # v13
    }


def _image(a: ReducedElement, images: dict, ring) -> list:
    out = [ring.zero] * 4
    for key, coef in a.coeffs.items():
        out = [o + coef * v for o, v in zip(out, images[key])]
    return out


@dataclass
class CliffordIsoReport:
    verified: bool
    products_checked: int
    failures: list = dc_field(default_factory=list)   # [{"a","b","lhs","rhs"}]
    bijective: bool = False
    associative: bool = False
    discriminant: Poly | None = None
    discriminant_is_unit_times_t: bool = False
    uniqueness: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (self.verified and self.bijective and self.associative
                and self.discriminant_is_unit_times_t and self.uniqueness.get("unique_up_to_units", False))


def _is_unit_times_t(d: Poly) -> bool:
    return d.degree() == 1 and d.coeff(0).is_zero() and d.coeff(1).degree() == 0


def clifford_iso_check(field, images: dict | None = None, search_uniqueness: bool = True) -> CliffordIsoReport:
    q = build_quadratic_form(field)
    C = even_clifford(q)
    R = q.ring
    images = images or candidate_images(R)
    failures = []
    for (i, j), (k, l) in product(ALG_BASIS, repeat=2):
        a = ReducedElement.basis(2, i, j, R)
        b = ReducedElement.basis(2, k, l, R)
        lhs = _image(a * b, images, R)
        rhs = C.multiply(images[(i, j)], images[(k, l)])
        if lhs != rhs:
            failures.append({"a": ALG_LABELS[ALG_BASIS.index((i, j))],
                             "b": ALG_LABELS[ALG_BASIS.index((k, l))], "lhs": lhs, "rhs": rhs})
    M = Matrix.from_columns(R, [images[key] for key in ALG_BASIS], 4)
    d = det(M)
    disc = discriminant(q)
    rep = CliffordIsoReport(
        verified=not failures,
        products_checked=16,
        failures=failures,
        bijective=d.degree() == 0,
        associative=C.is_associative() and C.is_unital(),
        discriminant=disc,
        discriminant_is_unit_times_t=_is_unit_times_t(disc),
    )
    if search_uniqueness:
        rep.uniqueness = uniqueness_search(C)
    return rep


def _peirce_solutions(C: EvenCliffordAlgebra, left: list, right: list, tdeg: int = 1) -> list:
    """k-basis of {Y : left Y = Y = Y right} with entries of t-degree <= tdeg, constant in x."""
    R = C.ring
    Rx = R.base
    F = Rx.base
    nunk = 4 * (tdeg + 1)

    def build(vec):
        return [Poly(R, [Rx.convert(vec[4 * s + a]) for s in range(tdeg + 1)]) for a in range(4)]

    span = tdeg + 3
    cols = []
    for u in range(nunk):
        vec = [F.zero] * nunk
        vec[u] = F.one
        Y = build(vec)
        res = [a - b for a, b in zip(C.multiply(left, Y), Y)] + [a - b for a, b in zip(C.multiply(Y, right), Y)]
        col = []
        for r in res:
            for s in range(span):
                cx = r.coeff(s)
                col.extend(cx.coeff(e) for e in range(2))
        cols.append(col)
    basis = linalg.nullspace([list(r) for r in zip(*cols)], nunk, F)
    return [build(v) for v in basis]


def uniqueness_search(C: EvenCliffordAlgebra) -> dict:
    """With e0, e1 sent to v23, 1 - v23, the images of b(0,1), b(1,0) are
    u*(-v12), u^-1*v13 for a unit u, within t-degree <= 1."""
    R = C.ring
    im = candidate_images(R)
    e0, e1 = im[(0, 0)], im[(1, 1)]
    Ys = _peirce_solutions(C, e0, e1)
    Zs = _peirce_solutions(C, e1, e0)
    t = R.gen
    report = {"peirce_dims": [len(Ys), len(Zs)]}
    if len(Ys) != 2 or len(Zs) != 2:
        report["unique_up_to_units"] = False
        return report
    # each Peirce space is k{Y0, t Y0}; products scale as t^(i+j) times Y0 Z0
    Y0 = _match_monomial_basis(Ys, t)
    Z0 = _match_monomial_basis(Zs, t)
    if Y0 is None or Z0 is None:
        report["unique_up_to_units"] = False
        return report
    base = C.multiply(Y0, Z0)
    e0_t = [c * t for c in e0]
    shape_ok = all(
        C.multiply([c * t ** i for c in Y0], [c * t ** j for c in Z0]) == [c * t ** (i + j) for c in base]
        for i in range(2) for j in range(2))
    # (a + b t)(c + d t) * base = t e0 forces base = unit * t e0 and b = d = 0
    scale = _scalar_ratio(base, e0_t)
    report["product_form"] = shape_ok
    report["unique_up_to_units"] = bool(shape_ok and scale is not None)
    return report


def _match_monomial_basis(sols: list, t) -> list | None:
    """Find Y0 with span(sols) = k{Y0, t Y0}."""
    for Y in sols:
        if all(c.degree() <= 0 for c in Y) and any(c for c in Y):
            tY = [c * t for c in Y]
            F = Y[0].ring.base.base
            rows = [_flat(v, F) for v in sols]
            if linalg.spans_equal(rows, [_flat(Y, F), _flat(tY, F)], len(rows[0]), F):
                return Y
    return None


def _flat(vec, F) -> list:
    out = []
    for c in vec:
        for s in range(3):
            out.append(c.coeff(s).coeff(0))
    return out


def _scalar_ratio(u: list, v: list):
    """Nonzero constant lam in k with u = lam * v, or None."""
    lam = None
    for a, b in zip(u, v):
        if not b:
            if a:
                return None
            continue
        q, r = a.divmod(b) if b.lc.degree() == 0 else (None, a)
        if r or q is None or q.degree() != 0 or q.coeff(0).degree() != 0:
            return None
        if lam is None:
            lam = q
        elif q != lam:
            return None
    return lam


# ------------------------------------------------------------------ fibers

def clifford_peirce_elements(fiber: FiberAlgebra) -> list:
    """Fiber values of the images of e0, e1, b(0,1), b(1,0)."""
    F = fiber.field
    o, z = F.one, F.zero
    return [[z, z, z, o], [o, z, z, F.neg(o)], [z, F.neg(o), z, z], [z, z, o, z]]


@dataclass
class FiberCliffordReport:
    t0: object
    x0: object
    path_simple: bool
    clifford_simple: bool
    iso_specializes: bool

    @property
    def ok(self) -> bool:
        expected = self.t0 != 0
        return self.iso_specializes and self.path_simple == expected and self.clifford_simple == expected


def fiber_clifford_check(t0, field, x0=0) -> FiberCliffordReport:
    q = build_quadratic_form(field)
    C = even_clifford(q)
    x0, t0 = field.convert(x0), field.convert(t0)
    fc = C.fiber(x0, t0)
    fa = fiber_at(2, x0, t0, field)
    peirce = clifford_peirce_elements(fc)
    # images in the b(i,j) order of the Â(2) fiber: b(0,0), b(0,1), b(1,0), b(1,1)
    order = {(0, 0): 0, (0, 1): 2, (1, 0): 3, (1, 1): 1}
    syms = basis_symbols(2)
    ims = [peirce[order[s]] for s in syms]
    ok = True
    for a, b in product(range(4), repeat=2):
        lhs = [field.zero] * 4
        for c, coef in enumerate(fa.table[a][b]):
            if coef:
                lhs = [field.add(u, field.mul(coef, v)) for u, v in zip(lhs, ims[c])]
        if lhs != fc.multiply(ims[a], ims[b]):
            ok = False
            break
    return FiberCliffordReport(
        t0=t0, x0=x0,
        path_simple=simplicity_check(fa),
        clifford_simple=simplicity_check(fc, peirce),
        iso_specializes=ok,
    )
