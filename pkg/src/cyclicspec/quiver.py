"""The cyclic quiver Q(m) and its path algebra A(m) on a trivialising chart.

On an affine chart every twisting line bundle is trivial, so A(m) is the
path algebra of Q(m) with coefficients in R = k[x]; path length records the
twist. Vertices are v_0..v_{m-1}; arrow a_i goes v_i -> v_{i+1 mod m}.
A path is determined by its source and its length, and products are written
right-to-left: ``p * q`` means "first q, then p".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .polyalg import linalg
from .polyalg.poly import Poly, PolyRing, poly_ring


@dataclass(frozen=True)
class CyclicQuiver:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("the cyclic quiver needs m >= 1 vertices")

    def head(self, i: int) -> int:
        return (i + 1) % self.m

    def tail(self, i: int) -> int:
        return i % self.m

    def vertices(self) -> range:
        return range(self.m)


@dataclass(frozen=True, order=True)
class Path:
    """Unique path of ``length`` arrows leaving vertex ``source`` in Q(m)."""

    m: int
    source: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative path length")
        object.__setattr__(self, "source", self.source % self.m)

    @property
    def target(self) -> int:
        return (self.source + self.length) % self.m

    @classmethod
    def between(cls, m: int, source: int, target: int, length: int) -> Path:
        if (target - source - length) % m:
            raise ValueError(f"no path of length {length} from v{source} to v{target} in Q({m})")
        return cls(m, source, length)

    def __str__(self):
        if self.length == 0:
            return f"e{self.source}"
        return f"[v{self.source}->v{self.target}; {self.length}]"


def idempotent(m: int, i: int) -> Path:
    return Path(m, i, 0)


def arrow(m: int, i: int) -> Path:
    return Path(m, i, 1)


def loop(m: int, i: int, power: int = 1) -> Path:
    """c_i^power: the path of length m*power from v_i back to v_i."""
    return Path(m, i, m * power)


def compose_paths(p: Path, q: Path) -> Path | None:
    """p * q (q first); None stands for the zero of the algebra."""
    if p.m != q.m:
        raise ValueError("paths from different quivers")
    if p.source != q.target:
        return None
    return Path(p.m, q.source, p.length + q.length)


class PathAlgebraElement:
    """Finite R-linear combination of paths, R = k[x]."""

    __slots__ = ("m", "ring", "terms")

    def __init__(self, m: int, ring: PolyRing, terms=None):
        self.m = m
        self.ring = ring
        clean = {}
        for path, c in (terms or {}).items():
            c = ring.convert(c)
            if c:
                clean[path] = c
        self.terms = clean

    @classmethod
    def from_path(cls, path: Path, ring: PolyRing, coeff=1) -> PathAlgebraElement:
        return cls(path.m, ring, {path: coeff})

    @classmethod
    def unit(cls, m: int, ring: PolyRing) -> PathAlgebraElement:
        return cls(m, ring, {idempotent(m, i): ring.one for i in range(m)})

    @classmethod
    def zero(cls, m: int, ring: PolyRing) -> PathAlgebraElement:
        return cls(m, ring, {})

    def __add__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out[p] + c if p in out else c
        return PathAlgebraElement(self.m, self.ring, out)

    def __neg__(self):
        return PathAlgebraElement(self.m, self.ring, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PathAlgebraElement):
            return multiply(self, other)
        c = self.ring.convert(other)
        return PathAlgebraElement(self.m, self.ring, {p: c * a for p, a in self.terms.items()})

    def __rmul__(self, other):
        c = self.ring.convert(other)
        return PathAlgebraElement(self.m, self.ring, {p: c * a for p, a in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, PathAlgebraElement) and self.m == other.m
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def lengths(self) -> set[int]:
        return {p.length for p in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{p}" for p, c in sorted(self.terms.items()))


def multiply(a: PathAlgebraElement, b: PathAlgebraElement) -> PathAlgebraElement:
    """Bilinear extension of :func:`compose_paths`."""
    if a.m != b.m:
        raise ValueError("elements of different path algebras")
    out: dict[Path, Poly] = {}
    for p, cp in a.terms.items():
        for q, cq in b.terms.items():
            r = compose_paths(p, q)
            if r is None:
                continue
            c = cp * cq
            out[r] = out[r] + c if r in out else c
    return PathAlgebraElement(a.m, a.ring, out)


def idempotent_decompose(a: PathAlgebraElement) -> dict[tuple[int, int], PathAlgebraElement]:
    """Components a_{i<-j} = e_i a e_j for every (i, j), zero ones included."""
    m = a.m
    parts = {(i, j): {} for i in range(m) for j in range(m)}
    for p, c in a.terms.items():
        parts[(p.target, p.source)][p] = c
    return {k: PathAlgebraElement(m, a.ring, v) for k, v in parts.items()}


def diagonal_embed(m: int, ell: int, coeff, ring: PolyRing) -> PathAlgebraElement:
    """coeff * sum_i c_i^ell, the image of coeff*t^ell under the diagonal map."""
    return PathAlgebraElement(m, ring, {loop(m, i, ell): coeff for i in range(m)})


def generators(m: int, ring: PolyRing) -> list[PathAlgebraElement]:
    return ([PathAlgebraElement.from_path(idempotent(m, i), ring) for i in range(m)]
            + [PathAlgebraElement.from_path(arrow(m, i), ring) for i in range(m)])


def paths_up_to(m: int, max_length: int) -> list[Path]:
    return [Path(m, j, ell) for ell in range(max_length + 1) for j in range(m)]


# ------------------------------------------------------------------ center

def truncated_center(m: int, N: int, field, x_cap: int = 2) -> list[PathAlgebraElement]:
    """k[x]-basis of the central elements supported on paths of length <= N.

    Unknowns are the coefficients of x^d (d <= x_cap) on every path of length
    <= N; the commutation equations with all e_i and a_i are solved over k.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    R = poly_ring(field, "x")
    paths = paths_up_to(m, N)
    nx = x_cap + 1
    unknowns = [(p, d) for d in range(nx) for p in paths]
    col = {u: k for k, u in enumerate(unknowns)}
    # equation rows indexed by (output path, x-degree)
    eq_index: dict[tuple[Path, int], int] = {}
    entries: dict[tuple[int, int], int] = {}

    def bump(row_key, column, val):
        r = eq_index.setdefault(row_key, len(eq_index))
        entries[(r, column)] = entries.get((r, column), 0) + val

    for g in generators(m, R):
        (gp,) = g.terms
        for p in paths:
            for d in range(nx):
                c = col[(p, d)]
                left = compose_paths(p, gp)    # z * g
                right = compose_paths(gp, p)   # g * z
                if left is not None:
                    bump((gp, left, d), c, 1)
                if right is not None:
                    bump((gp, right, d), c, -1)
    n = len(unknowns)
    rows = [[0] * n for _ in range(len(eq_index))]
    for (r, c), v in entries.items():
        rows[r][c] = field.convert(v)
    null = linalg.nullspace(rows, n, field) if rows else [
        [field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    # RREF-canonical nullspace vectors are supported in one x-degree block each;
    # the x^0 block is a k[x]-basis when every block is its shift.
    blocks: dict[int, list] = {}
    for v in null:
        degs = {unknowns[k][1] for k, val in enumerate(v) if not field.is_zero(val)}
        if len(degs) != 1:
            raise AssertionError("commutation system mixes x-degrees")
        blocks.setdefault(degs.pop(), []).append(v)
    base_block = blocks.get(0, [])
    if any(len(blocks.get(d, [])) != len(base_block) for d in range(nx)):
        raise AssertionError("center is not x-shift invariant within the cap")
    basis = []
    for v in base_block:
        terms = {unknowns[k][0]: R.convert(val) for k, val in enumerate(v) if not field.is_zero(val)}
        basis.append(PathAlgebraElement(m, R, terms))
    basis.sort(key=lambda e: min(p.length for p in e.terms))
    return basis


def _element_vector(e: PathAlgebraElement, index: dict[Path, int], field) -> list:
    v = [field.zero] * len(index)
    for p, c in e.terms.items():
        if c.degree() > 0:
            raise ValueError("expected constant coefficients")
        v[index[p]] = c.coeff(0)
    return v


def center_matches_diagonal(basis: list[PathAlgebraElement], m: int, N: int, field) -> bool:
    """Whether span(basis) = span{diagonal_embed(ell, 1) : m*ell <= N} over k."""
    R = poly_ring(field, "x")
    paths = paths_up_to(m, N)
    index = {p: k for k, p in enumerate(paths)}
    diag = [diagonal_embed(m, ell, 1, R) for ell in range(N // m + 1)]
    A = [_element_vector(e, index, field) for e in basis]
    B = [_element_vector(e, index, field) for e in diag]
    return linalg.spans_equal(A, B, len(paths), field)


def commutes_with(z: PathAlgebraElement, g: PathAlgebraElement) -> bool:
    return multiply(z, g) == multiply(g, z)


# ------------------------------------------------------------------ pushforward kernel

def pushforward_kernel_check(m: int, N: int, field) -> bool:
    """Compare ker(R[t] ⊗ A(m) -> A(m)) with the two-sided ideal generated by
    1⊗Δ(t) - t⊗1, as graded k-spaces inside the box (path length <= N,
    t-degree <= N // m)."""
    kernel, ideal, nb = pushforward_spaces(m, N, field)
    return linalg.spans_equal(kernel, ideal, nb, field)


def pushforward_spaces(m: int, N: int, field, generator: dict | None = None):
    """(kernel basis, ideal spanning set, box dimension) inside the truncation box.

    ``generator`` maps (t-degree, Path) to an integer coefficient; default is
    1⊗Δ(t) - t⊗1.
    """
    if N < m:
        raise ValueError(f"truncation N={N} too small to contain the generator (need N >= m={m})")
    smax = N // m
    paths = paths_up_to(m, N)
    box = [(s, p) for s in range(smax + 1) for p in paths]
    bindex = {b: k for k, b in enumerate(box)}
    nb = len(box)

    # multiplication map: t^s ⊗ p -> c_{target}^s p
    targets = paths_up_to(m, N + m * smax)
    tindex = {p: k for k, p in enumerate(targets)}
    mu_rows = [[0] * nb for _ in range(len(targets))]
    for k, (s, p) in enumerate(box):
        img = Path(m, p.source, p.length + m * s)
        mu_rows[tindex[img]][k] = 1
    mu_rows = [[field.convert(v) for v in r] for r in mu_rows]
    kernel = linalg.nullspace(mu_rows, nb, field)

    # generator g = sum_i 1⊗c_i - t⊗e_i, as a dict {(s, path): coeff}
    gen = generator
    if gen is None:
        gen = {}
        for i in range(m):
            gen[(0, loop(m, i))] = 1
            gen[(1, idempotent(m, i))] = -1

    def mono_mul(a, b):
        (sa, pa), (sb, pb) = a, b
        r = compose_paths(pa, pb)
        return None if r is None else (sa + sb, r)

    ideal_vectors = []
    for u in box:
        ug = {}
        for g, c in gen.items():
            r = mono_mul(u, g)
            if r is not None:
                ug[r] = ug.get(r, 0) + c
        if not ug:
            continue
        for v in box:
            ugv = {}
            for w, c in ug.items():
                r = mono_mul(w, v)
                if r is not None:
                    ugv[r] = ugv.get(r, 0) + c
            ugv = {w: c for w, c in ugv.items() if c}
            if not ugv or any(w not in bindex for w in ugv):
                continue
            vec = [field.zero] * nb
            for w, c in ugv.items():
                vec[bindex[w]] = field.convert(c)
            ideal_vectors.append(vec)
    return kernel, ideal_vectors, nb


def associativity_exhaustive(m: int, max_length: int, field) -> bool:
    R = poly_ring(field, "x")
    els = [PathAlgebraElement.from_path(p, R) for p in paths_up_to(m, max_length)]
    for a, b, c in product(els, repeat=3):
        if multiply(multiply(a, b), c) != multiply(a, multiply(b, c)):
            return False
    return True
