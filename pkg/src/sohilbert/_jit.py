"""numba versions of the F_p elimination kernels (imported lazily)."""

from numba import njit


@njit(cache=True)
def powmod(a, e, p):
    result = 1
    a = a % p
    while e > 0:
        if e & 1:
            result = (result * a) % p
        a = (a * a) % p
        e >>= 1
    return result


@njit(cache=True)
def rank_kernel(M, p):
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                tmp = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = tmp
        inv = powmod(M[r, c], p - 2, p)
        for j in range(c, cols):
            M[r, j] = (M[r, j] * inv) % p
        for i in range(r + 1, rows):
            f = M[i, c]
            if f != 0:
                for j in range(c, cols):
                    M[i, j] = (M[i, j] - f * M[r, j]) % p
        r += 1
    return r


@njit(cache=True)
def det_kernel(M, p):
    n = M.shape[0]
    det = 1
    for c in range(n):
        piv = -1
        for i in range(c, n):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != c:
            for j in range(c, n):
                tmp = M[c, j]
                M[c, j] = M[piv, j]
                M[piv, j] = tmp
            det = -det
        det = (det * M[c, c]) % p
        inv = powmod(M[c, c], p - 2, p)
        for i in range(c + 1, n):
            f = (M[i, c] * inv) % p
            if f != 0:
                for j in range(c, n):
                    M[i, j] = (M[i, j] - f * M[c, j]) % p
    return det % p
