"""Seeded random cyclic Higgs data."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..correspondence import irreducibility, smoothness_certificate
from ..errors import PreconditionError, RetryBudgetExhausted
from ..higgs import CyclicHiggsData, common_component_check
from ..polyalg.fields import DEFAULT_PRIME, GF, PrimeField
from ..polyalg.matrix import Matrix
from ..polyalg.poly import Poly, poly_ring

Q_COEFF_RANGE = 9
FILTERS = (None, "smooth")


@dataclass(frozen=True)
class InstanceSpec:
    m: int
    dims: tuple
    field: object = None
    degree_cap: int = 2
    seed: int = 0
    filter: str | None = None
    retries: int = 200

    def __post_init__(self):
        if self.m < 1 or len(self.dims) != self.m or any(int(p) < 1 for p in self.dims):
            raise PreconditionError("dims must be m positive integers")
        if self.degree_cap < 0:
            raise PreconditionError("degree cap must be non-negative")
        if self.filter not in FILTERS:
            raise PreconditionError(f"unknown filter {self.filter!r}")
        if self.field is None:
            object.__setattr__(self, "field", GF(DEFAULT_PRIME))
        object.__setattr__(self, "dims", tuple(int(p) for p in self.dims))


def _coeff(F, rng: random.Random):
    if isinstance(F, PrimeField):
        return rng.randrange(F.p)
    return F.convert(rng.randint(-Q_COEFF_RANGE, Q_COEFF_RANGE))


def _draw(spec: InstanceSpec, rng: random.Random) -> CyclicHiggsData:
    F = spec.field
    R = poly_ring(F, "x")
    m, dims = spec.m, spec.dims
    phi = []
    for i in range(m):
        rows = [[Poly(R, [_coeff(F, rng) for _ in range(spec.degree_cap + 1)])
                 for _ in range(dims[i])] for _ in range(dims[(i + 1) % m])]
        phi.append(Matrix(R, rows, dims[i]))
    return CyclicHiggsData(m, F, dims, phi)


def passes_smooth_filter(H: CyclicHiggsData) -> bool:
    """Equal ranks, a common curve, certified smooth and irreducible."""
    if len(set(H.dims)) != 1:
        return False
    rep = common_component_check(H)
    if not rep.strict or any(rep.q):
        return False
    c = rep.common
    if c.degree() < 1:
        return False
    if not smoothness_certificate(c).smooth:
        return False
    return irreducibility(c)[0] is True


def random_instance(spec: InstanceSpec) -> CyclicHiggsData:
    """Deterministic in ``spec``; with a filter, redraws until it passes."""
    rng = random.Random(spec.seed)
    if spec.filter is None:
        return _draw(spec, rng)
    for _ in range(spec.retries):
        H = _draw(spec, rng)
        if passes_smooth_filter(H):
            return H
    raise RetryBudgetExhausted(f"no instance passed the {spec.filter!r} filter in {spec.retries} draws")
