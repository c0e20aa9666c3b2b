"""Hot kernels for linear algebra over F_p on int64 arrays.

Each kernel has a numba ``@njit`` version and a pure-numpy version with the
same contract. The numba path is used unless ``CYCSPEC_NUMBA=0`` is set in the
environment (or numba cannot be imported). Entries must lie in ``[0, p)`` and
``p`` must be below ``MAX_PRIME`` so that products fit in int64.
"""

from __future__ import annotations

import os

import numpy as np

MAX_PRIME = 3_037_000_493   # floor(sqrt(2**63 - 1))


def _env_wants_numba() -> bool:
    return os.environ.get("CYCSPEC_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:   # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _env_wants_numba()


# ---------------------------------------------------------------- numpy path

def _inv_mod(a: int, p: int) -> int:
    return pow(int(a), -1, int(p))


def rref_mod_p_numpy(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form of ``a`` over F_p; returns (R, pivot_columns)."""
    a = np.array(a, dtype=np.int64, copy=True) % p
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * _inv_mod(a[r, c], p) % p
        col = a[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            a[rows] = (a[rows] - np.outer(col[rows], a[r]) % p) % p
        pivots.append(c)
        r += 1
    return a, np.array(pivots, dtype=np.int64)


def matmul_mod_p_numpy(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    k = a.shape[1] if a.ndim == 2 else 0
    if k * (p - 1) ** 2 < 2 ** 63:
        return (a @ b) % p
    return ((a.astype(object) @ b.astype(object)) % p).astype(np.int64)


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:
    @njit(cache=True)
    def _inv_mod_nb(a, p):
        t, newt = 0, 1
        r, newr = p, a % p
        while newr != 0:
            q = r // newr
            t, newt = newt, t - q * newt
            r, newr = newr, r - q * newr
        if t < 0:
            t += p
        return t

    @njit(cache=True)
    def _rref_mod_p_nb(a, p):
        nrows, ncols = a.shape
        pivots = np.empty(min(nrows, ncols), dtype=np.int64)
        npiv = 0
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(ncols):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
            inv = _inv_mod_nb(a[r, c], p)
            for j in range(c, ncols):
                a[r, j] = a[r, j] * inv % p
            for i in range(nrows):
                if i == r:
                    continue
                f = a[i, c]
                if f == 0:
                    continue
                for j in range(c, ncols):
                    if a[r, j] != 0:
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
            pivots[npiv] = c
            npiv += 1
            r += 1
        return a, pivots[:npiv]

    @njit(cache=True)
    def _matmul_mod_p_nb(a, b, p, lazy):
        # lazy: k * (p-1)^2 fits in int64, so reduce once at the end
        n, k = a.shape
        m = b.shape[1]
        out = np.zeros((n, m), dtype=np.int64)
        for i in range(n):
            for l in range(k):
                x = a[i, l]
                if x == 0:
                    continue
                if lazy:
                    for j in range(m):
                        out[i, j] += x * b[l, j]
                else:
                    for j in range(m):
                        out[i, j] = (out[i, j] + x * b[l, j]) % p
        if lazy:
            for i in range(n):
                for j in range(m):
                    out[i, j] %= p
        return out

    def rref_mod_p_numba(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
        a = np.array(a, dtype=np.int64, copy=True) % p
        return _rref_mod_p_nb(a, np.int64(p))

    def matmul_mod_p_numba(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
        a = np.ascontiguousarray(a, dtype=np.int64)
        b = np.ascontiguousarray(b, dtype=np.int64)
        lazy = a.shape[1] * (p - 1) ** 2 < 2 ** 63
        return _matmul_mod_p_nb(a, b, np.int64(p), lazy)


def rref_mod_p(a, p: int, use_numba: bool | None = None):
    if p >= MAX_PRIME:
        raise ValueError(f"prime {p} too large for int64 kernels")
    use = USE_NUMBA if use_numba is None else (use_numba and HAVE_NUMBA)
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    if a.size == 0:
        return a.copy(), np.zeros(0, dtype=np.int64)
    return rref_mod_p_numba(a, p) if use else rref_mod_p_numpy(a, p)


def matmul_mod_p(a, b, p: int, use_numba: bool | None = None) -> np.ndarray:
    if p >= MAX_PRIME:
        raise ValueError(f"prime {p} too large for int64 kernels")
    use = USE_NUMBA if use_numba is None else (use_numba and HAVE_NUMBA)
    return matmul_mod_p_numba(a, b, p) if use else matmul_mod_p_numpy(a, b, p)


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
