"""Immutable dense matrices over any commutative ring object in this package
(a field, k[x], k[x][t] or the rational function field k(x))."""

from __future__ import annotations

from .poly import Poly, PolyRing, poly_ring


class Matrix:
    __slots__ = ("ring", "rows", "nrows", "ncols")

    def __init__(self, ring, rows, ncols: int | None = None):
        conv = ring.convert
        self.ring = ring
        self.rows = tuple(tuple(conv(v) for v in row) for row in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")

    # -- constructors --------------------------------------------------
    @classmethod
    def zeros(cls, ring, nrows: int, ncols: int) -> Matrix:
        return cls(ring, [[ring.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, ring, n: int) -> Matrix:
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def diagonal(cls, ring, entries) -> Matrix:
        n = len(entries)
        return cls(ring, [[entries[i] if i == j else ring.zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, ring, cols, nrows: int | None = None) -> Matrix:
        cols = [list(c) for c in cols]
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        return cls(ring, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    # -- access --------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.ncols)]

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    # -- arithmetic ----------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix) or other.shape != self.shape:
            return NotImplemented if not isinstance(other, Matrix) else False
        eq = self.ring.eq
        return all(eq(a, b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        add = self.ring.add
        return Matrix(self.ring, [[add(a, b) for a, b in zip(ra, rb)]
                                  for ra, rb in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        sub = self.ring.sub
        return Matrix(self.ring, [[sub(a, b) for a, b in zip(ra, rb)]
                                  for ra, rb in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self) -> Matrix:
        neg = self.ring.neg
        return Matrix(self.ring, [[neg(a) for a in r] for r in self.rows], self.ncols)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        R = self.ring
        if other.ring != R:
            other = other.change_ring(R)
        add, mul, is_zero = R.add, R.mul, R.is_zero
        cols = other.columns()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = R.zero
                for a, b in zip(r, c):
                    if is_zero(a) or is_zero(b):
                        continue
                    acc = add(acc, mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(R, out, other.ncols)

    def scale(self, s) -> Matrix:
        mul = self.ring.mul
        s = self.ring.convert(s)
        return Matrix(self.ring, [[mul(s, a) for a in r] for r in self.rows], self.ncols)

    def __pow__(self, n: int) -> Matrix:
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        result = Matrix.identity(self.ring, self.nrows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def transpose(self) -> Matrix:
        return Matrix(self.ring, [list(c) for c in zip(*self.rows)] if self.rows else [], self.nrows)

    T = property(transpose)

    def map(self, fn, ring=None) -> Matrix:
        ring = ring or self.ring
        return Matrix(ring, [[fn(a) for a in r] for r in self.rows], self.ncols)

    def change_ring(self, ring) -> Matrix:
        return Matrix(ring, self.rows, self.ncols)

    def hstack(self, other: Matrix) -> Matrix:
        return Matrix(self.ring, [ra + rb for ra, rb in zip(self.rows, other.rows)],
                      self.ncols + other.ncols)

    def vstack(self, other: Matrix) -> Matrix:
        return Matrix(self.ring, self.rows + other.rows, self.ncols)

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(a) for r in self.rows for a in r)

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self):
        body = "; ".join(", ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"


# ------------------------------------------------------------------ determinants

def berkowitz(M: Matrix) -> list:
    """Coefficients [1, c1, ..., cn] of det(t*I - M) in descending powers of t.

    Division-free, so it is valid over any commutative ring.
    """
    if not M.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    R = M.ring
    n = M.nrows
    A = [list(r) for r in M.rows]
    add, mul, sub, neg = R.add, R.mul, R.sub, R.neg
    vect = [R.one, neg(A[0][0])] if n else [R.one]
    for r in range(1, n):
        # Toeplitz column built from the leading r x r block
        C = [A[i][r] for i in range(r)]        # column above the diagonal entry
        Rrow = [A[r][j] for j in range(r)]     # row left of the diagonal entry
        a = A[r][r]
        # powers: Rrow * A_r^k * C
        coeffs = [R.one, neg(a)]
        vec = C
        for _ in range(r):
            s = R.zero
            for x, y in zip(Rrow, vec):
                s = add(s, mul(x, y))
            coeffs.append(neg(s))
            vec = [_dot(R, [A[i][j] for j in range(r)], vec) for i in range(r)]
        # multiply Toeplitz (lower triangular, first column coeffs) by vect
        new = []
        for i in range(r + 2):
            acc = R.zero
            for j in range(min(i + 1, len(vect))):
                acc = add(acc, mul(coeffs[i - j], vect[j]))
            new.append(acc)
        vect = new
    return vect


def _dot(R, u, v):
    acc = R.zero
    for a, b in zip(u, v):
        acc = R.add(acc, R.mul(a, b))
    return acc


def char_poly(M: Matrix, var: str = "t") -> Poly:
    """det(var*I - M) as a polynomial in ``var`` over ``M.ring``."""
    desc = berkowitz(M)
    return Poly(poly_ring(M.ring, var), list(reversed(desc)))


def det(M: Matrix):
    if not M.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = M.nrows
    if n == 0:
        return M.ring.one
    if M.ring.is_field:
        return _det_gauss(M)
    c0 = berkowitz(M)[-1]
    return c0 if n % 2 == 0 else M.ring.neg(c0)


def _det_gauss(M: Matrix):
    F = M.ring
    A = [list(r) for r in M.rows]
    n = len(A)
    d = F.one
    for k in range(n):
        piv = next((i for i in range(k, n) if not F.is_zero(A[i][k])), None)
        if piv is None:
            return F.zero
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            d = F.neg(d)
        d = F.mul(d, A[k][k])
        inv = F.inv(A[k][k])
        for i in range(k + 1, n):
            f = F.mul(A[i][k], inv)
            if F.is_zero(f):
                continue
            A[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(A[i], A[k])]
    return d


def adjugate(M: Matrix) -> Matrix:
    """adj(M) from Cayley-Hamilton: division-free, any commutative ring."""
    n = M.nrows
    R = M.ring
    if n == 1:
        return Matrix.identity(R, 1)
    desc = berkowitz(M)   # t^n + c1 t^{n-1} + ... + cn
    # adj(M) = (-1)^(n-1) * (M^(n-1) + c1 M^(n-2) + ... + c_{n-1} I)
    acc = Matrix.identity(R, n)
    for k in range(1, n):
        acc = acc @ M + Matrix.identity(R, n).scale(desc[k])
    return acc if n % 2 == 1 else -acc


def inverse_over_field(M: Matrix) -> Matrix:
    F = M.ring
    n = M.nrows
    if not M.is_square():
        raise ValueError("inverse of a non-square matrix")
    A = [list(r) + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(M.rows)]
    for k in range(n):
        piv = next((i for i in range(k, n) if not F.is_zero(A[i][k])), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[k], A[piv] = A[piv], A[k]
        inv = F.inv(A[k][k])
        A[k] = [F.mul(inv, a) for a in A[k]]
        for i in range(n):
            if i != k and not F.is_zero(A[i][k]):
                f = A[i][k]
                A[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(A[i], A[k])]
    return Matrix(F, [r[n:] for r in A], n)


def inverse_unimodular(M: Matrix) -> Matrix:
    """Inverse of a matrix over k[x] whose determinant is a nonzero constant."""
    d = det(M)
    R = M.ring
    if not R.is_unit(d):
        raise ZeroDivisionError("matrix is not unimodular")
    return adjugate(M).scale(R.unit_inverse(d))


def eval_poly_at_matrix(c: Poly, M: Matrix) -> Matrix:
    """c(M) for c a polynomial whose coefficients live in M.ring (Horner)."""
    R = M.ring
    n = M.nrows
    acc = Matrix.zeros(R, n, n)
    ident = Matrix.identity(R, n)
    for coef in reversed(c.coeffs):
        acc = acc @ M + ident.scale(coef)
    return acc


def poly_matrix(field, rows, var: str = "x") -> Matrix:
    """Convenience constructor: entries are coefficient lists or scalars."""
    R = poly_ring(field, var)
    return Matrix(R, rows)


def companion(c: Poly) -> Matrix:
    """Matrix of multiplication by t on k[x][t]/(c) in the basis 1, t, ..., t^(p-1)."""
    if not c.is_monic():
        raise ValueError("companion matrix of a non-monic polynomial")
    R = c.ring.base
    p = c.degree()
    rows = [[R.zero] * p for _ in range(p)]
    for j in range(p - 1):
        rows[j + 1][j] = R.one
    for j in range(p):
        rows[j][p - 1] = R.neg(c.coeffs[j])
    return Matrix(R, rows, p)


def is_polyring(R) -> bool:
    return isinstance(R, PolyRing)
