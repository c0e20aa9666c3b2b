from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from cyclicspec.errors import VariableMismatch
from cyclicspec.polyalg import linalg
from cyclicspec.polyalg.fields import GF, QQ, parse_field
from cyclicspec.polyalg.matrix import Matrix, adjugate, char_poly, det, eval_poly_at_matrix
from cyclicspec.polyalg.normal_forms import (hermite_form, is_smith_form, lattice_equal, resultant,
                                             smith_normal_form)
from cyclicspec.polyalg.poly import Poly, poly_gcd, poly_ring, poly_xgcd, squarefree_part
from cyclicspec.polyalg.roots import is_irreducible_fp, roots
from cyclicspec.reduction import rt_ring

F5, F7 = GF(5), GF(7)
R5 = poly_ring(F5, "x")
RQ = poly_ring(QQ, "x")


def P(R, coeffs):
    return Poly(R, coeffs)


polys_f5 = st.lists(st.integers(0, 4), min_size=0, max_size=5).map(lambda c: P(R5, c))
nonzero_f5 = polys_f5.filter(lambda f: not f.is_zero())


def brute_divisors(f):
    """All monic divisors of f over F5 up to degree deg f (exhaustive)."""
    out = []
    for d in range(f.degree() + 1):
        for tail in product(range(5), repeat=d):
            g = P(R5, list(tail) + [1])
            if g.divides(f):
                out.append(g)
    return out


# ------------------------------------------------------------------ fields

def test_field_parsing():
    assert parse_field("Fp") == GF(10007)
    assert parse_field("F7") == F7
    assert parse_field("GF(7)") == F7
    assert parse_field("Q") == QQ
    with pytest.raises(ValueError):
        parse_field("F8")


def test_field_arithmetic():
    assert F7.mul(3, F7.inv(3)) == 1
    assert QQ.from_str("-1/2") == Fraction(-1, 2)
    assert F7.to_str(F7.convert(-1)) == "6"
    with pytest.raises(ZeroDivisionError):
        F7.inv(0)


# ------------------------------------------------------------------ polynomials

def test_gcd_example():
    x = RQ.gen
    assert poly_gcd(x * x - 1, x - 1) == x - 1


@given(nonzero_f5, nonzero_f5)
def test_gcd_matches_brute_force(f, g):
    common = [d for d in brute_divisors(f) if d.divides(g)]
    best = max(common, key=lambda d: d.degree())
    assert poly_gcd(f, g) == best


@given(polys_f5, polys_f5)
def test_xgcd_bezout(f, g):
    d, s, t = poly_xgcd(f, g)
    assert s * f + t * g == d
    if not f.is_zero() or not g.is_zero():
        assert d.is_monic()


@given(nonzero_f5, nonzero_f5.filter(lambda g: g.degree() >= 0))
def test_divmod(f, g):
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.degree() < g.degree()


@given(nonzero_f5)
def test_squarefree_part(f):
    s = squarefree_part(f)
    assert s.divides(f)
    assert poly_gcd(s, s.derivative()).degree() == 0


def test_variable_mismatch():
    Ry = poly_ring(F5, "y")
    with pytest.raises(VariableMismatch):
        R5.gen + Ry.gen


# ------------------------------------------------------------------ resultants

def test_resultant_example():
    S = rt_ring(QQ)
    t, x = S.gen, S.base.gen
    r = resultant(t * t - x, 2 * t)
    assert r in (4 * x, -4 * x)


def test_resultant_common_root_vanishes():
    S = poly_ring(QQ, "t")
    t = S.gen
    assert resultant((t - 1) * (t + 2), (t - 1) * (t + 5)) == 0
    assert resultant(t - 3, t - 5) != 0


@given(st.lists(st.integers(0, 4), min_size=2, max_size=4),
       st.lists(st.integers(0, 4), min_size=2, max_size=4),
       st.lists(st.integers(0, 4), min_size=2, max_size=4))
def test_resultant_multiplicative(a, b, c):
    St = poly_ring(F5, "t")
    f, g, h = P(St, a[:-1] + [1]), P(St, b[:-1] + [1]), P(St, c[:-1] + [1])
    assert resultant(f, g * h) == F5.mul(resultant(f, g), resultant(f, h))


# ------------------------------------------------------------------ matrices

def test_smith_example():
    x = RQ.gen
    M = Matrix(RQ, [[x, 1], [0, x]])
    U, D, V = smith_normal_form(M)
    assert D == Matrix.diagonal(RQ, [RQ.one, x * x])
    assert U @ M @ V == D


mats_f5 = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 3).flatmap(
        lambda c: st.lists(st.lists(st.lists(st.integers(0, 4), max_size=3), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@given(mats_f5)
def test_smith_properties(rows):
    M = Matrix(R5, rows)
    U, D, V = smith_normal_form(M)
    assert U @ M @ V == D
    assert is_smith_form(D)
    assert det(U).degree() == 0 and det(V).degree() == 0


@given(mats_f5)
def test_hermite_canonical_under_unimodular(rows):
    M = Matrix(R5, rows)
    x = R5.gen
    n = M.ncols
    # elementary column operation with a polynomial multiplier is unimodular
    E = Matrix.identity(R5, n)
    if n > 1:
        E = Matrix(R5, [[R5.one if i == j else (x + 2 if (i, j) == (0, 1) else R5.zero) for j in range(n)]
                        for i in range(n)])
    assert hermite_form(M) == hermite_form(M @ E)
    assert lattice_equal(M, M @ E)


def cofactor_det(M):
    n = M.nrows
    R = M.ring
    if n == 0:
        return R.one
    total = R.zero
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = R.one
        for i in range(n):
            term = term * M[i, perm[i]]
        total = total + term if sign > 0 else total - term
    return total


square_f5 = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.lists(st.lists(st.integers(0, 4), max_size=3), min_size=n, max_size=n),
                       min_size=n, max_size=n))


@given(square_f5)
def test_det_matches_permutation_expansion(rows):
    M = Matrix(R5, rows)
    assert det(M) == cofactor_det(M)


@given(square_f5)
def test_char_poly_cayley_hamilton(rows):
    M = Matrix(R5, rows)
    c = char_poly(M)
    assert c.is_monic() and c.degree() == M.nrows
    assert eval_poly_at_matrix(c, M).is_zero()
    # constant term is (-1)^n det M
    n = M.nrows
    assert c.coeff(0) == (det(M) if n % 2 == 0 else -det(M))


@given(square_f5)
def test_adjugate_identity(rows):
    M = Matrix(R5, rows)
    n = M.nrows
    assert M @ adjugate(M) == Matrix.identity(R5, n).scale(det(M))


def test_char_poly_example():
    M = Matrix(poly_ring(QQ, "x"), [[0, 1], [1, 0]])
    c = char_poly(M)
    assert [c.coeff(k) for k in range(3)] == [-1, 0, 1]


# ------------------------------------------------------------------ linear algebra over k

@given(st.lists(st.lists(st.integers(0, 6), min_size=4, max_size=4), min_size=1, max_size=5))
def test_nullspace_kills(rows):
    ns = linalg.nullspace(rows, 4, F7)
    assert len(ns) + linalg.rank(rows, 4, F7) == 4
    for v in ns:
        assert all(F7.is_zero(sum(a * b for a, b in zip(r, v)) % 7) for r in rows)


# ------------------------------------------------------------------ roots and irreducibility

R7 = poly_ring(F7, "t")


@given(st.lists(st.integers(0, 6), min_size=1, max_size=6).map(lambda c: P(R7, c + [1])))
def test_roots_match_scan(f):
    assert roots(f) == [a for a in range(7) if f(a) == 0]


@given(st.lists(st.integers(0, 6), min_size=1, max_size=4).map(lambda c: P(R7, c + [1])))
def test_rabin_matches_brute_force(f):
    n = f.degree()
    has_factor = False
    for d in range(1, n // 2 + 1):
        for tail in product(range(7), repeat=d):
            if P(R7, list(tail) + [1]).divides(f):
                has_factor = True
                break
        if has_factor:
            break
    assert is_irreducible_fp(f) == (not has_factor)


def test_roots_over_q():
    S = poly_ring(QQ, "t")
    t = S.gen
    f = (2 * t - 1) * (t + 3) * (t * t + 1)
    assert roots(f) == [Fraction(-3), Fraction(1, 2)]
