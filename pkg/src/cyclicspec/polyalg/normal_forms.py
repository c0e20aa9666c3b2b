"""Smith and Hermite normal forms over k[x], Sylvester resultants in t over k[x]."""

from __future__ import annotations

from .matrix import Matrix, det
from .poly import Poly, PolyRing


def _deg(p: Poly) -> int:
    return p.degree()


def smith_normal_form(M: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U @ M @ V == D over k[x].

    U, V have nonzero constant determinant; D is diagonal with d_i | d_{i+1}
    and each d_i monic or zero. Pivot: smallest degree, ties broken by the
    lowest row index, then the lowest column index.
    """
    R = M.ring
    r, c = M.shape
    A = [list(row) for row in M.rows]
    U = [[R.one if i == j else R.zero for j in range(r)] for i in range(r)]
    V = [[R.one if i == j else R.zero for j in range(c)] for i in range(c)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] = row[dst] + q * row[src]
        for row in V:
            row[dst] = row[dst] + q * row[src]

    for k in range(min(r, c)):
        while True:
            best = None
            for i in range(k, r):
                for j in range(k, c):
                    a = A[i][j]
                    if a and (best is None or _deg(a) < best[0]):
                        best = (_deg(a), i, j)
            if best is None:
                break
            _, i, j = best
            if i != k:
                swap_rows(i, k)
            if j != k:
                swap_cols(j, k)
            piv = A[k][k]
            clean = True
            for i in range(k + 1, r):
                if A[i][k]:
                    q, rem = A[i][k].divmod(piv)
                    add_row(i, k, -q)
                    if rem:
                        clean = False
            for j in range(k + 1, c):
                if A[k][j]:
                    q, rem = A[k][j].divmod(piv)
                    add_col(j, k, -q)
                    if rem:
                        clean = False
            if not clean:
                continue
            bad = next(((i, j) for i in range(k + 1, r) for j in range(k + 1, c)
                        if A[i][j] and not piv.divides(A[i][j])), None)
            if bad is None:
                break
            add_row(k, bad[0], R.one)
        if A[k][k]:
            inv = R.base.inv(A[k][k].lc)
            A[k] = [a.scale(inv) for a in A[k]]
            U[k] = [a.scale(inv) for a in U[k]]
        else:
            break
    return Matrix(R, U, r), Matrix(R, A, c), Matrix(R, V, c)


def invariant_factors(M: Matrix) -> list[Poly]:
    _, D, _ = smith_normal_form(M)
    return [D[i, i] for i in range(min(D.shape))]


def is_smith_form(D: Matrix) -> bool:
    r, c = D.shape
    for i in range(r):
        for j in range(c):
            if i != j and D[i, j]:
                return False
    diag = [D[i, i] for i in range(min(r, c))]
    for a, b in zip(diag, diag[1:]):
        if not a.divides(b):
            return False
    return all(d.is_zero() or d.is_monic() for d in diag)


def hermite_form(M: Matrix, with_transform: bool = False):
    """Column Hermite form of the k[x]-lattice spanned by the columns of M.

    Returns H (rows x rank), lower triangular in the pivot rows, with monic
    pivots and entries left of each pivot of smaller degree than the pivot.
    Two generator matrices span the same lattice iff their forms coincide.
    With ``with_transform`` also returns V such that M @ V = [H | 0].
    """
    R = M.ring
    r, c = M.shape
    cols = [list(col) for col in M.columns()]
    V = [[R.one if i == j else R.zero for j in range(c)] for i in range(c)]   # columns

    def col_op(dst, src, q):
        cols[dst] = [a + q * b for a, b in zip(cols[dst], cols[src])]
        V[dst] = [a + q * b for a, b in zip(V[dst], V[src])]

    def col_swap(i, j):
        cols[i], cols[j] = cols[j], cols[i]
        V[i], V[j] = V[j], V[i]

    pivots = []   # (row, col)
    nxt = 0
    for i in range(r):
        if nxt >= c:
            break
        while True:
            nz = [j for j in range(nxt, c) if cols[j][i]]
            if not nz:
                break
            jmin = min(nz, key=lambda j: (_deg(cols[j][i]), j))
            if jmin != nxt:
                col_swap(jmin, nxt)
            piv = cols[nxt][i]
            done = True
            for j in range(nxt + 1, c):
                if cols[j][i]:
                    q = cols[j][i].divmod(piv)[0]
                    col_op(j, nxt, -q)
                    if cols[j][i]:
                        done = False
            if done:
                break
        if nxt < c and cols[nxt][i]:
            inv = R.base.inv(cols[nxt][i].lc)
            cols[nxt] = [a.scale(inv) for a in cols[nxt]]
            V[nxt] = [a.scale(inv) for a in V[nxt]]
            pivots.append((i, nxt))
            nxt += 1
    for i, pc in pivots:
        piv = cols[pc][i]
        for j in range(pc):
            if cols[j][i]:
                q = cols[j][i].divmod(piv)[0]
                if q:
                    col_op(j, pc, -q)
    rank = len(pivots)
    H = Matrix.from_columns(R, cols[:rank], r) if rank else Matrix.zeros(R, r, 0)
    if with_transform:
        return H, Matrix.from_columns(R, V, c)
    return H


def lattice_equal(A: Matrix, B: Matrix) -> bool:
    return hermite_form(A) == hermite_form(B)


def lattice_length(H: Matrix) -> int:
    """k-dimension of k[x]^n / (column span of a full-rank square H)."""
    d = det(H)
    if d.is_zero():
        raise ValueError("lattice does not have full rank")
    return d.degree()


# ------------------------------------------------------------------ resultants

def sylvester_matrix(f: Poly, g: Poly) -> Matrix:
    """Sylvester matrix of f, g in t with entries in the coefficient ring."""
    R = f.ring.base
    n, m = f.degree(), g.degree()
    size = n + m
    rows = []
    for i in range(m):
        row = [R.zero] * size
        for k, a in enumerate(reversed(f.coeffs)):
            row[i + k] = a
        rows.append(row)
    for i in range(n):
        row = [R.zero] * size
        for k, a in enumerate(reversed(g.coeffs)):
            row[i + k] = a
        rows.append(row)
    return Matrix(R, rows, size)


def resultant(f: Poly, g: Poly):
    """Res_t(f, g) as an element of the coefficient ring (k[x] for f, g in k[x][t])."""
    if f.ring != g.ring:
        from ..errors import VariableMismatch
        raise VariableMismatch("resultant of polynomials in different rings")
    if f.is_zero() and g.is_zero():
        raise ValueError("resultant of two zero polynomials")
    R = f.ring.base
    if f.is_zero() or g.is_zero():
        return R.zero
    if f.degree() == 0 and g.degree() == 0:
        return R.one
    return det(sylvester_matrix(f, g))


def bareiss_det(M: Matrix):
    """Fraction-free determinant over an integral domain with exact division."""
    R = M.ring
    n = M.nrows
    A = [list(r) for r in M.rows]
    sign = 1
    prev = R.one
    for k in range(n - 1):
        if not A[k][k]:
            sw = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sw is None:
                return R.zero
            A[k], A[sw] = A[sw], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]).exact_div(prev)
        prev = A[k][k]
    d = A[n - 1][n - 1] if n else R.one
    return d if sign > 0 else -d


def is_polyring(R) -> bool:
    return isinstance(R, PolyRing)
