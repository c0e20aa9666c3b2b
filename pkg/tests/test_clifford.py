from itertools import product

import pytest
from hypothesis import given, strategies as st

from cyclicspec.clifford import (ALG_BASIS, EVEN_BASIS, build_quadratic_form, candidate_images,
                                 clifford_iso_check, commutator_trace_check, discriminant,
                                 even_clifford, fiber_clifford_check, trace_map, traceless_decompose)
from cyclicspec.errors import CharacteristicError, PreconditionError
from cyclicspec.polyalg import linalg
from cyclicspec.polyalg.fields import GF, QQ
from cyclicspec.reduction import ReducedElement, rt_ring

R = rt_ring(QQ)
t, x = R.gen, R.base.gen
F10007 = GF(10007)


def b(i, j, ring=R):
    return ReducedElement.basis(2, i, j, ring)


def unit(ring=R):
    return ReducedElement.unit(2, ring)


def v(label):
    return [R.one if k == EVEN_BASIS.index(label) else R.zero for k in range(4)]


# ------------------------------------------------------------------ trace

def test_trace_examples():
    assert trace_map(unit()) == 2
    assert trace_map(b(0, 1)).is_zero()
    assert trace_map(t * b(0, 0) - t * b(1, 1)).is_zero()


def test_trace_needs_m2():
    with pytest.raises(PreconditionError):
        trace_map(ReducedElement.unit(3, R))


def test_decompose_examples():
    d = traceless_decompose(b(0, 0))
    assert d.scalar == 1
    half = QQ.convert("1/2")
    assert d.traceless == b(0, 0) * half - b(1, 1) * half
    d = traceless_decompose(b(1, 0))
    assert d.scalar.is_zero() and d.traceless == b(1, 0)


coeff = st.lists(st.lists(st.integers(-3, 3), max_size=2), max_size=2).map(R.convert)
elements = st.tuples(coeff, coeff, coeff, coeff).map(
    lambda cs: ReducedElement(2, R, dict(zip(ALG_BASIS, cs))))


@given(elements)
def test_decompose_reassembles(a):
    d = traceless_decompose(a)
    assert d.reassemble() == a
    assert trace_map(d.traceless).is_zero()


@given(elements, elements, coeff)
def test_trace_linear_and_kills_commutators(a, c, r):
    assert trace_map(a + c * r) == trace_map(a) + trace_map(c) * r
    assert trace_map(a * c - c * a).is_zero()


def test_commutator_examples():
    assert trace_map(b(0, 1) * b(1, 0) - b(1, 0) * b(0, 1)).is_zero()
    assert commutator_trace_check([(b(0, 0), b(1, 0) + t * b(1, 1))])
    assert commutator_trace_check(ring=R)


# ------------------------------------------------------------------ form and algebra

def test_quadratic_form_examples():
    q = build_quadratic_form(QQ)
    assert q([1, 0, 0]) == t
    assert q([0, 1, 1]) == 1
    assert discriminant(q) == -2 * t


def test_characteristic_two_rejected():
    with pytest.raises(CharacteristicError):
        build_quadratic_form(GF(2))


def test_even_clifford_products():
    C = even_clifford(build_quadratic_form(QQ))
    assert C.multiply(v((1, 2)), v((1, 2))) == v((1, 2))
    assert all(c.is_zero() for c in C.multiply(v((0, 1)), v((0, 1))))
    assert C.multiply(v((0, 1)), v((0, 2))) == [-t * a for a in v((1, 2))]
    assert C.multiply(v((1, 2)), v((0, 1))) == v((0, 1))
    assert C.is_associative() and C.is_unital()


def test_iso_example_products():
    C = even_clifford(build_quadratic_form(QQ))
    im = candidate_images(R)
    assert C.multiply(im[(0, 1)], im[(1, 0)]) == [t * a for a in im[(0, 0)]]
    assert C.multiply(im[(1, 0)], im[(0, 1)]) == [t * a for a in im[(1, 1)]]


@pytest.mark.parametrize("F", [QQ, F10007, GF(7)])
def test_iso_check(F):
    rep = clifford_iso_check(F)
    assert rep.ok
    assert rep.products_checked == 16 and not rep.failures
    assert rep.uniqueness["peirce_dims"] == [2, 2]


def test_tampered_images_fail():
    im = candidate_images(R)
    im[(1, 0)] = [-a for a in im[(1, 0)]]
    rep = clifford_iso_check(QQ, im, search_uniqueness=False)
    assert not rep.verified and rep.failures
    im = candidate_images(R)
    im[(0, 1)] = [t * a for a in im[(0, 1)]]
    assert not clifford_iso_check(QQ, im, search_uniqueness=False).verified


# ------------------------------------------------------------------ fibers

def _semisimple_by_trace_form(f):
    """Trace form of the regular representation; over a field of characteristic
    above the dimension it is nondegenerate iff the algebra is semisimple."""
    F, n = f.field, f.dim
    L = [f.left_matrix(a) for a in range(n)]
    gram = []
    for a, c in product(range(n), repeat=2):
        prod = f.table[a][c]
        gram.append(sum(prod[d] * L[d][k][k] for d in range(n) for k in range(n)) % F.p)
    return linalg.rank([gram[r * n:(r + 1) * n] for r in range(n)], n, F) == n


@pytest.mark.parametrize("t0", [1, 0])
def test_fiber_examples(t0):
    rep = fiber_clifford_check(t0, GF(7))
    assert rep.ok and rep.iso_specializes
    assert rep.path_simple == rep.clifford_simple == bool(t0)


def test_fiber_scan_f7():
    assert all(fiber_clifford_check(t0, GF(7)).ok for t0 in range(7))


@given(st.integers(0, 100), st.integers(0, 100))
def test_fiber_simplicity_matches_trace_form(t0, x0):
    F = GF(101)
    rep = fiber_clifford_check(t0, F, x0)
    C = even_clifford(build_quadratic_form(F))
    # both fibers are 4-dimensional with one-dimensional center, so simple <=> semisimple
    assert rep.clifford_simple == _semisimple_by_trace_form(C.fiber(x0, t0))
    assert rep.path_simple == rep.clifford_simple
