"""Hot kernels: Gaussian elimination over F_p on dense int64 matrices.

Each kernel has a numba ``@njit`` implementation and a pure-numpy one.  The
numba path is used when numba imports cleanly and ``SOHILBERT_NO_JIT`` is not
set to a true value; numba itself is imported lazily so closed-form code
paths never pay for JIT start-up.

Entries are reduced into ``[0, p)``; with ``p < 2**31`` every product of two
entries fits in int64.
"""

from __future__ import annotations

import os

import numpy as np

MAX_PRIME = 2**31 - 1


def jit_enabled() -> bool:
    flag = os.environ.get("SOHILBERT_NO_JIT", "").strip().lower()
    if flag in ("1", "true", "yes", "on"):
        return False
    return _numba_kernels() is not None


# --- pure numpy -------------------------------------------------------------


def rank_mod_p_numpy(A: np.ndarray, p: int) -> int:
    M = np.array(A, dtype=np.int64) % p
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r, c:] = (M[r, c:] * inv) % p
        below = r + 1 + np.flatnonzero(M[r + 1 :, c])
        if below.size:
            f = M[below, c][:, None]
            M[below, c:] = (M[below, c:] - f * M[r, c:][None, :]) % p
        r += 1
    return r


def det_mod_p_numpy(A: np.ndarray, p: int) -> int:
    M = np.array(A, dtype=np.int64) % p
    n = M.shape[0]
    det = 1
    for c in range(n):
        nz = np.flatnonzero(M[c:, c])
        if nz.size == 0:
            return 0
        piv = c + nz[0]
        if piv != c:
            M[[c, piv]] = M[[piv, c]]
            det = -det
        det = (det * int(M[c, c])) % p
        inv = pow(int(M[c, c]), p - 2, p)
        below = c + 1 + np.flatnonzero(M[c + 1 :, c])
        if below.size:
            f = (M[below, c] * inv % p)[:, None]
            M[below, c:] = (M[below, c:] - f * M[c, c:][None, :]) % p
    return det % p


# --- numba ------------------------------------------------------------------

_NUMBA = None
_NUMBA_TRIED = False


def _numba_kernels():
    global _NUMBA, _NUMBA_TRIED
    if _NUMBA_TRIED:
        return _NUMBA
    _NUMBA_TRIED = True
    try:
        from sohilbert import _jit
    except ImportError:
        return None

    _NUMBA = (_jit.rank_kernel, _jit.det_kernel)
    return _NUMBA


def rank_mod_p_numba(A: np.ndarray, p: int) -> int:
    kernels = _numba_kernels()
    if kernels is None:
        raise RuntimeError("numba is not available")
    M = np.ascontiguousarray(A, dtype=np.int64) % p
    return int(kernels[0](M, np.int64(p)))


def det_mod_p_numba(A: np.ndarray, p: int) -> int:
    kernels = _numba_kernels()
    if kernels is None:
        raise RuntimeError("numba is not available")
    M = np.ascontiguousarray(A, dtype=np.int64) % p
    return int(kernels[1](M, np.int64(p)))


# --- dispatch ---------------------------------------------------------------


def rank_mod_p(A: np.ndarray, p: int) -> int:
    """Rank of ``A`` over F_p."""
    A = np.asarray(A)
    if A.size == 0:
        return 0
    if jit_enabled():
        return rank_mod_p_numba(A, p)
    return rank_mod_p_numpy(A, p)


def det_mod_p(A: np.ndarray, p: int) -> int:
    A = np.asarray(A)
    if A.shape[0] != A.shape[1]:
        raise ValueError("determinant of a non-square matrix")
    if A.shape[0] == 0:
        return 1
    if jit_enabled():
        return det_mod_p_numba(A, p)
    return det_mod_p_numpy(A, p)


def sparse_rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    """Rank of a sparse matrix given as ``{column: value}`` rows.

    Markowitz-style pivoting: the pivot minimises
    ``(row_count - 1) * (col_count - 1)`` over the sparsest remaining rows,
    ties broken by (row index, column index) so the result is deterministic.
    """
    active = {}
    for i, row in enumerate(rows):
        r = {c: v % p for c, v in row.items() if v % p}
        if r:
            active[i] = r
    col_rows: dict[int, set[int]] = {}
    for i, r in active.items():
        for c in r:
            col_rows.setdefault(c, set()).add(i)

    rank = 0
    while active:
        min_len = min(len(r) for r in active.values())
        best = None
        for i in sorted(i for i, r in active.items() if len(r) <= min_len + 1):
            r = active[i]
            for c in sorted(r):
                cost = (len(r) - 1) * (len(col_rows[c]) - 1)
                key = (cost, i, c)
                if best is None or key < best:
                    best = key
        _, pi, pc = best
        prow = active.pop(pi)
        for c in prow:
            col_rows[c].discard(pi)
        inv = pow(prow[pc], p - 2, p)
        for i in sorted(col_rows[pc]):
            r = active[i]
            f = (r[pc] * inv) % p
            for c, v in prow.items():
                nv = (r.get(c, 0) - f * v) % p
                if nv:
                    if c not in r:
                        col_rows[c].add(i)
                    r[c] = nv
                elif c in r:
                    del r[c]
                    col_rows[c].discard(i)
            if not r:
                del active[i]
        rank += 1
    return rank
