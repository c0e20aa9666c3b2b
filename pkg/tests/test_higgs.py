import pytest
from hypothesis import assume, given, strategies as st

from conftest import higgs, xmat
from cyclicspec.cli.instances import InstanceSpec, random_instance
from cyclicspec.errors import LoopRelationError, PreconditionError
from cyclicspec.higgs import (CyclicHiggsData, SLattice, SpectralQuiverData, block_cyclic_matrix,
                              common_component_check, from_spectral_module, loop_composite,
                              path_action, spectral_curve, spectral_curves, to_spectral_module,
                              verify_equivariance, verify_loop_relation, verify_support)
from cyclicspec.polyalg.fields import GF, QQ
from cyclicspec.polyalg.matrix import Matrix, char_poly, det, inverse_unimodular
from cyclicspec.polyalg.poly import Poly
from cyclicspec.quiver import Path, arrow, idempotent, loop
from cyclicspec.reduction import rt_ring

F7 = GF(7)
S7 = rt_ring(F7)
t, x = S7.gen, S7.base.gen


def ex_1x1():
    return higgs(F7, (1, 1), [[[0, 1]]], [[[-1, 1]]])          # ([x], [x - 1])


def ex_21():
    return higgs(F7, (2, 1), [[1, [0, 1]]], [[1], [1]])        # phi0 = [1, x], phi1 = [1; 1]


def instances(max_m=4, max_p=3, equal=False):
    def build(args):
        m, ps, seed = args
        dims = (ps[0],) * m if equal else tuple(ps[:m])
        return random_instance(InstanceSpec(m, dims, F7, 2, seed))
    return st.tuples(st.integers(1, max_m), st.lists(st.integers(1, max_p), min_size=4, max_size=4),
                     st.integers(0, 10 ** 6)).map(build)


# ------------------------------------------------------------------ loop composites and curves

def test_loop_composite_examples():
    H = ex_1x1()
    assert loop_composite(H, 0) == xmat(F7, [[[0, -1, 1]]])
    assert loop_composite(H, 1) == xmat(F7, [[[0, -1, 1]]])
    H = ex_21()
    assert loop_composite(H, 1) == xmat(F7, [[[1, 1]]])
    assert loop_composite(H, 0) == xmat(F7, [[1, [0, 1]], [1, [0, 1]]])
    H1 = higgs(F7, (2,), [[0, 1], [1, 0]])
    assert loop_composite(H1, 0) == H1.phi[0]


def test_spectral_curve_examples():
    H = ex_1x1()
    assert spectral_curve(H, 0) == t - x * x + x == spectral_curve(H, 1)
    H = ex_21()
    assert spectral_curve(H, 1) == t - 1 - x
    assert spectral_curve(H, 0) == t * t - (1 + x) * t
    Q = rt_ring(QQ)
    H = higgs(QQ, (2,), [[0, 1], [1, 0]])
    assert spectral_curve(H, 0) == Q.gen ** 2 - 1


def test_common_component_examples():
    cc = common_component_check(ex_21())
    assert cc.strict and cc.q == (1, 0)
    assert cc.common == t - 1 - x
    cc = common_component_check(higgs(F7, (1, 1), [[0]], [[[0, 1]]]))
    assert cc.strict and cc.q == (1, 1)
    assert cc.common == S7.one


@given(instances(equal=True))
def test_equal_dims_curves_coincide(H):
    cc = common_component_check(H)
    assert cc.strict and not any(cc.q)


@given(instances())
def test_curves_monic_of_rank_degree(H):
    for i, c in enumerate(spectral_curves(H)):
        assert c.is_monic() and c.degree() == H.dims[i]


def _unit_lower(F, n, seed):
    vals = [(seed >> (3 * k)) % 7 for k in range(n * n)]
    rows = [[1 if i == j else (vals[i * n + j] if j < i else 0) for j in range(n)] for i in range(n)]
    perm = [(i + seed) % n for i in range(n)]
    return xmat(F, [rows[perm[i]] for i in range(n)])


@given(instances(), st.integers(0, 2 ** 40))
def test_conjugation_invariance(H, seed):
    g = [_unit_lower(F7, p, seed + i) for i, p in enumerate(H.dims)]
    phi = [g[(i + 1) % H.m] @ A @ inverse_unimodular(g[i]) for i, A in enumerate(H.phi)]
    H2 = CyclicHiggsData(H.m, F7, H.dims, phi)
    assert spectral_curves(H2) == spectral_curves(H)


@given(instances(max_m=3, max_p=2, equal=True))
def test_block_cyclic_determinant(H):
    # det(sI - Phi) = c_i(s^m) for every i when dims are equal, hence
    # det(sI - Phi)^m = prod_i c_i(s^m)
    chi = char_poly(block_cyclic_matrix(H), "t")
    m = H.m
    spread = []
    for c in spectral_curves(H):
        coeffs = [S7.base.zero] * (m * c.degree() + 1)
        for k, a in enumerate(c.coeffs):
            coeffs[m * k] = a
        spread.append(Poly(chi.ring, coeffs))
    assert all(chi == s for s in spread)
    prod = chi.ring.one
    for s in spread:
        prod = prod * s
    assert chi ** m == prod


# ------------------------------------------------------------------ spectral module

def test_path_action_examples():
    H = ex_21()
    assert path_action(H, idempotent(2, 0)) == Matrix.identity(H.ring, 2)
    assert path_action(H, Path(2, 0, 2)) == H.phi[1] @ H.phi[0]
    for i in range(2):
        assert path_action(H, loop(2, i)) == loop_composite(H, i)
    assert path_action(H, arrow(2, 1)) == H.phi[1]


def test_to_spectral_module_example():
    H = ex_1x1()
    S = to_spectral_module(H)
    assert S.F[0].T == S.F[1].T == xmat(F7, [[[0, -1, 1]]])
    assert S.psi == H.phi
    H1 = higgs(F7, (2,), [[[0, 1], 1], [2, 3]])
    S1 = to_spectral_module(H1)
    assert S1.F[0].T == H1.phi[0]


@given(instances())
def test_spectral_module_properties(H):
    S = to_spectral_module(H)
    assert verify_loop_relation(S)
    assert verify_equivariance(S)
    assert all(verify_support(S, i) for i in range(H.m))
    assert from_spectral_module(S) == H


def test_perturbed_loop_relation_fails():
    H = ex_1x1()
    S = to_spectral_module(H)
    bad = SpectralQuiverData(2, S.F, (S.psi[0] + Matrix.identity(H.ring, 1), S.psi[1]))
    assert not verify_loop_relation(bad)
    with pytest.raises(LoopRelationError):
        from_spectral_module(bad)


def test_verify_support_nonreduced():
    N = xmat(F7, [[0, 1], [0, 0]])
    S = SpectralQuiverData(1, [SLattice(2, N)], [N])
    assert verify_support(S, 0, t * t)
    assert not verify_support(S, 0, t)


def test_shape_validation():
    with pytest.raises(PreconditionError):
        higgs(F7, (2, 1), [[1, 1]], [[1, 1]])
