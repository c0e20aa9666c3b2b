"""Linear algebra over a ground field k on plain row lists.

Prime fields dispatch to the int64 kernels in :mod:`cyclicspec.kernels`;
the rationals use exact ``Fraction`` elimination.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .. import kernels
from .fields import Field, PrimeField


def _use_kernel(field: Field) -> bool:
    return isinstance(field, PrimeField) and field.p < kernels.MAX_PRIME


def _rref_generic(rows, ncols: int, field: Field):
    A = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(A):
            break
        piv = next((i for i in range(r, len(A)) if not field.is_zero(A[i][c])), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = field.inv(A[r][c])
        A[r] = [field.mul(inv, a) for a in A[r]]
        for i in range(len(A)):
            if i != r and not field.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rref(rows, ncols: int, field: Field) -> tuple[list[list], list[int]]:
    """Nonzero rows of the reduced row echelon form, and the pivot columns."""
    rows = [list(r) for r in rows]
    if not rows or ncols == 0:
        return [], []
    if _use_kernel(field):
        R, piv = kernels.rref_mod_p(np.array(rows, dtype=np.int64), field.p)
        k = len(piv)
        return [[int(v) for v in R[i]] for i in range(k)], [int(c) for c in piv]
    if not isinstance(field, PrimeField):
        rows = [[Fraction(v) for v in r] for r in rows]
    return _rref_generic(rows, ncols, field)


def rank(rows, ncols: int, field: Field) -> int:
    return len(rref(rows, ncols, field)[1])


def nullspace(rows, ncols: int, field: Field) -> list[list]:
    """Basis of {v : A v = 0}, one vector per free column (RREF-canonical)."""
    R, piv = rref(rows, ncols, field)
    pivset = set(piv)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for row, pc in zip(R, piv):
            v[pc] = field.neg(row[free])
        basis.append(v)
    return basis


def span_basis(vectors, ncols: int, field: Field) -> list[list]:
    return rref(vectors, ncols, field)[0]


def span_contains(basis_rows, vectors, ncols: int, field: Field) -> bool:
    """Whether every vector lies in the span of ``basis_rows``."""
    r0 = rank(basis_rows, ncols, field)
    return rank(list(basis_rows) + list(vectors), ncols, field) == r0


def spans_equal(a, b, ncols: int, field: Field) -> bool:
    ra, rb = rank(a, ncols, field), rank(b, ncols, field)
    return ra == rb == rank(list(a) + list(b), ncols, field)


def matvec(M, v, field: Field) -> list:
    return [_dot(row, v, field) for row in M]


def _dot(u, v, field: Field):
    acc = field.zero
    for a, b in zip(u, v):
        if not field.is_zero(a) and not field.is_zero(b):
            acc = field.add(acc, field.mul(a, b))
    return acc


def matmul(A, B, field: Field) -> list[list]:
    if _use_kernel(field) and A and B:
        out = kernels.matmul_mod_p(np.array(A, dtype=np.int64), np.array(B, dtype=np.int64), field.p)
        return [[int(v) for v in r] for r in out]
    cols = list(zip(*B))
    return [[_dot(r, c, field) for c in cols] for r in A]
