"""Cyclic Higgs data on an affine chart and its spectral quiver module.

A cyclic Higgs bundle restricted to a chart Spec k[x] with trivialised
canonical bundle is a dimension vector (p_0..p_{m-1}) with matrices
phi[i]: k[x]^{p_i} -> k[x]^{p_{i+1}}. The spectral side keeps the same maps
and lets t act on each vertex space through the loop composite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LoopRelationError, PreconditionError
from .polyalg.matrix import Matrix, char_poly, eval_poly_at_matrix
from .polyalg.poly import (Poly, gcd_over_fraction_field, poly_ring,
                           squarefree_part_over_fraction_field)
from .quiver import Path


@dataclass(frozen=True)
class CyclicHiggsData:
    m: int
    field: object
    dims: tuple
    phi: tuple

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(p) for p in self.dims))
        object.__setattr__(self, "phi", tuple(self.phi))
        if self.m < 1 or len(self.dims) != self.m or len(self.phi) != self.m:
            raise PreconditionError("need m dims and m arrow matrices")
        if any(p < 1 for p in self.dims):
            raise PreconditionError("dimension vector entries must be positive")
        R = self.ring
        for i, A in enumerate(self.phi):
            want = (self.dims[(i + 1) % self.m], self.dims[i])
            if A.shape != want:
                raise PreconditionError(f"phi[{i}] has shape {A.shape}, expected {want}")
            if A.ring != R:
                raise PreconditionError(f"phi[{i}] is not over {R!r}")

    @property
    def ring(self):
        return poly_ring(self.field, "x")

    def __eq__(self, other):
        return (isinstance(other, CyclicHiggsData) and self.m == other.m and self.field == other.field
                and self.dims == other.dims and all(a == b for a, b in zip(self.phi, other.phi)))

    def __hash__(self):
        return hash((self.m, self.dims))


@dataclass(frozen=True)
class SLattice:
    """Free k[x]-module of rank ``rank`` on which t acts by the matrix T."""

    rank: int
    T: Matrix

    def __post_init__(self):
        if self.T.shape != (self.rank, self.rank):
            raise PreconditionError("t-action matrix must be rank x rank")


@dataclass(frozen=True)
class SpectralQuiverData:
    m: int
    F: tuple
    psi: tuple

    def __post_init__(self):
        object.__setattr__(self, "F", tuple(self.F))
        object.__setattr__(self, "psi", tuple(self.psi))


def _idx(i: int, m: int) -> int:
    return i % m


def loop_composite(H: CyclicHiggsData, i: int) -> Matrix:
    """Phi_i = phi[i-1] ... phi[i+1] phi[i], a p_i x p_i matrix."""
    m = H.m
    i = _idx(i, m)
    acc = H.phi[i]
    for step in range(1, m):
        acc = H.phi[_idx(i + step, m)] @ acc
    return acc


def spectral_curve(H: CyclicHiggsData, i: int) -> Poly:
    return char_poly(loop_composite(H, i), "t")


def spectral_curves(H: CyclicHiggsData) -> list[Poly]:
    return [spectral_curve(H, i) for i in range(H.m)]


@dataclass
class CommonComponentReport:
    common: Poly | None
    q: tuple
    strict: bool
    squarefree_equal: bool
    squarefree_common: Poly | None
    curves: list

    def to_json(self, poly_to_json) -> dict:
        return {
            "common": None if self.common is None else poly_to_json(self.common),
            "q": list(self.q),
            "strict": self.strict,
            "squarefree_equal": self.squarefree_equal,
            "squarefree_common": None if self.squarefree_common is None
            else poly_to_json(self.squarefree_common),
        }


def strip_t(c: Poly) -> tuple[int, Poly]:
    """(v, c / t^v) with v the t-adic valuation of c."""
    v = c.valuation()
    if v <= 0:
        return max(v, 0), c
    return v, Poly(c.ring, c.coeffs[v:])


def common_component_check(H: CyclicHiggsData) -> CommonComponentReport:
    curves = spectral_curves(H)
    stripped = [strip_t(c) for c in curves]
    q = tuple(v for v, _ in stripped)
    rest = [r for _, r in stripped]
    strict = all(r == rest[0] for r in rest)
    sq = [squarefree_part_over_fraction_field(r) for r in rest]
    sq_equal = all(s == sq[0] for s in sq)
    return CommonComponentReport(
        common=rest[0] if strict else None,
        q=q,
        strict=strict,
        squarefree_equal=sq_equal,
        squarefree_common=sq[0] if sq_equal else None,
        curves=curves,
    )


def path_action(H: CyclicHiggsData, p: Path) -> Matrix:
    """Matrix of the action of a path E_source -> E_target (identity for e_i)."""
    if p.m != H.m:
        raise PreconditionError("path from a different quiver")
    R = H.ring
    acc = Matrix.identity(R, H.dims[p.source])
    for step in range(p.length):
        acc = H.phi[_idx(p.source + step, H.m)] @ acc
    return acc


def to_spectral_module(H: CyclicHiggsData) -> SpectralQuiverData:
    F = [SLattice(H.dims[i], loop_composite(H, i)) for i in range(H.m)]
    return SpectralQuiverData(H.m, F, H.phi)


def loop_of(S: SpectralQuiverData, i: int) -> Matrix:
    """psi[i-1] ... psi[i] on F_i."""
    m = S.m
    acc = S.psi[_idx(i, m)]
    for step in range(1, m):
        acc = S.psi[_idx(i + step, m)] @ acc
    return acc


def verify_loop_relation(S: SpectralQuiverData) -> bool:
    return all(loop_of(S, i) == S.F[i].T for i in range(S.m))


def verify_equivariance(S: SpectralQuiverData) -> bool:
    """psi[i] T_i = T_{i+1} psi[i] for every arrow."""
    m = S.m
    return all(S.psi[i] @ S.F[i].T == S.F[_idx(i + 1, m)].T @ S.psi[i] for i in range(m))


def verify_support(S: SpectralQuiverData, i: int, c: Poly | None = None) -> bool:
    """c(T_i) = 0; ``c`` defaults to the characteristic polynomial of T_i."""
    T = S.F[_idx(i, S.m)].T
    if c is None:
        c = char_poly(T, "t")
    return eval_poly_at_matrix(c, T).is_zero()


def from_spectral_module(S: SpectralQuiverData, field=None) -> CyclicHiggsData:
    if not verify_loop_relation(S):
        raise LoopRelationError("loop composites differ from the t-action: "
                                "the module does not annihilate the ideal of relations")
    field = field or S.psi[0].ring.field
    return CyclicHiggsData(S.m, field, tuple(F.rank for F in S.F), S.psi)


def block_cyclic_matrix(H: CyclicHiggsData) -> Matrix:
    """The (sum p_i) square Higgs field with phi[i] in block (i+1, i)."""
    R = H.ring
    offs = [0]
    for p in H.dims:
        offs.append(offs[-1] + p)
    n = offs[-1]
    rows = [[R.zero] * n for _ in range(n)]
    for i, A in enumerate(H.phi):
        r0, c0 = offs[_idx(i + 1, H.m)], offs[i]
        for a in range(A.nrows):
            for b in range(A.ncols):
                rows[r0 + a][c0 + b] = A[a, b]
    return Matrix(R, rows, n)


def curves_share_support(c1: Poly, c2: Poly) -> bool:
    """Equal squarefree parts over k(x)."""
    g = gcd_over_fraction_field(c1, c2)
    return (squarefree_part_over_fraction_field(c1) == squarefree_part_over_fraction_field(c2)
            and g.degree() >= 0)
