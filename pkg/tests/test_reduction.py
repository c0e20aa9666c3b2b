from itertools import product

import pytest
from hypothesis import given, strategies as st

from cyclicspec.errors import PreconditionError
from cyclicspec.polyalg import linalg
from cyclicspec.polyalg.fields import GF, QQ
from cyclicspec.reduction import (ReducedElement, associativity_exhaustive, basis_length,
                                  basis_symbols, fiber_at, index_of, loop_product, matrix_iso,
                                  mth_roots, rank_check, reduced_center_check, rt_ring,
                                  simplicity_check)

F5, F7, F101 = GF(5), GF(7), GF(101)
S = rt_ring(QQ)
t = S.gen


def b(m, i, j):
    return ReducedElement.basis(m, i, j, S)


def path_oracle(m, i, j, k, l):
    """Multiply b(i,j) b(k,l) as honest paths, then trade each full loop for t."""
    if j != k:
        return ReducedElement(m, S)
    length = basis_length(m, i, j) + basis_length(m, k, l)
    base = basis_length(m, i, l)
    assert (length - base) % m == 0
    return ReducedElement(m, S, {(i, l): t ** ((length - base) // m)})


def test_reduced_multiply_examples():
    assert b(3, 2, 1) * b(3, 1, 0) == b(3, 2, 0)
    assert b(3, 0, 2) * b(3, 2, 0) == t * b(3, 0, 0)
    assert (b(3, 0, 1) * b(3, 2, 0)).is_zero()


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_reduced_multiply_matches_paths(m):
    for (i, j), (k, l) in product(basis_symbols(m), repeat=2):
        assert b(m, i, j) * b(m, k, l) == path_oracle(m, i, j, k, l)


@pytest.mark.parametrize("m,rank", [(1, 1), (2, 4), (5, 25)])
def test_rank(m, rank):
    assert rank_check(m) == rank


@pytest.mark.parametrize("m", [1, 2, 3])
def test_associativity(m):
    assert associativity_exhaustive(m, QQ)


def test_fiber_examples():
    f0 = fiber_at(2, 0, 0, F7)
    prod = f0.table[index_of(2, 0, 1)][index_of(2, 1, 0)]
    assert all(v == 0 for v in prod)
    f1 = fiber_at(2, 0, 1, F7)
    prod = f1.table[index_of(2, 0, 1)][index_of(2, 1, 0)]
    assert prod == f1.basis_vector(index_of(2, 0, 0))
    for m in (1, 2, 3):
        f = fiber_at(m, 3, 5, F7)
        assert f.is_associative() and f.is_unital()


def test_matrix_iso_examples():
    iso = matrix_iso(fiber_at(2, 0, 4, F7), 2)
    assert iso.verified
    assert iso.images[(0, 1)] == 2 and iso.images[(1, 0)] == 2
    assert matrix_iso(fiber_at(1, 0, 3, F7), 3).verified
    roots = mth_roots(1, 3, F7)
    assert roots == [1, 2, 4]
    assert all(matrix_iso(fiber_at(3, 0, 1, F7), s).verified for s in roots)


def test_matrix_iso_preconditions():
    with pytest.raises(PreconditionError):
        matrix_iso(fiber_at(2, 0, 0, F7), 0)
    with pytest.raises(PreconditionError):
        matrix_iso(fiber_at(2, 0, 4, F7), 3)


def test_simplicity_examples():
    assert simplicity_check(fiber_at(2, 0, 1, F7))
    assert not simplicity_check(fiber_at(2, 0, 0, F7))
    assert mth_roots(2, 4, F5) == []
    assert simplicity_check(fiber_at(4, 0, 2, F5))
    # m = 1: the fiber is the ground field itself
    assert simplicity_check(fiber_at(1, 0, 0, F7))


def _center_dim(f):
    n, F = f.dim, f.field
    rows = []
    for a in range(n):
        L, Rm = f.left_matrix(a), f.right_matrix(a)
        # z*b_a - b_a*z = (R_a - L_a) z
        rows.extend([[F.sub(Rm[c][k], L[c][k]) for k in range(n)] for c in range(n)])
    return n - linalg.rank(rows, n, F)


def _trace_form_rank(f):
    n, F = f.dim, f.field
    gram = []
    for a in range(n):
        row = []
        for c in range(n):
            prod = f.table[a][c]
            M = [[0] * n for _ in range(n)]
            for d in range(n):
                if prod[d]:
                    Ld = f.left_matrix(d)
                    M = [[F.add(M[r][s], F.mul(prod[d], Ld[r][s])) for s in range(n)] for r in range(n)]
            row.append(sum(M[k][k] for k in range(n)) % F.p)
        gram.append(row)
    return linalg.rank(gram, n, F)


@given(st.integers(1, 4), st.integers(0, 100), st.integers(0, 100))
def test_simplicity_matches_trace_form_oracle(m, x0, t0):
    # over F_101 (characteristic above the dimension) simple <=> nondegenerate
    # trace form and one-dimensional center
    f = fiber_at(m, x0, t0, F101)
    oracle = _trace_form_rank(f) == f.dim and _center_dim(f) == 1
    assert simplicity_check(f) == oracle


@pytest.mark.parametrize("m", [1, 2, 3])
def test_reduced_center(m):
    assert reduced_center_check(m, QQ)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_loop_product_is_t(m):
    for i in range(m):
        assert loop_product(m, i, S) == t * b(m, i, i)
