# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled Gauss-Jordan elimination over F_p and GF(2^k).

Both routines reduce ``a`` in place to reduced row echelon form and return
the list of pivot columns.  Inputs are C-contiguous int64 arrays holding
canonical representatives (``0 <= x < p``, or bit-vectors below ``2**k``).
"""

from libc.stdlib cimport malloc, free


cdef long long _inv_mod(long long a, long long p) nogil:
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_mod_p(long long[:, ::1] a, long long p):
    cdef Py_ssize_t nr = a.shape[0], nc = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k, piv, nnz
    cdef long long inv, f, x
    cdef Py_ssize_t *cols
    pivots = []
    if nr == 0 or nc == 0:
        return pivots
    cols = <Py_ssize_t *> malloc(nc * sizeof(Py_ssize_t))
    if cols == NULL:
        raise MemoryError()
    try:
        with nogil:
            for c in range(nc):
                if r == nr:
                    break
                piv = -1
                for i in range(r, nr):
                    if a[i, c] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != r:
                    for j in range(c, nc):
                        x = a[r, j]
                        a[r, j] = a[piv, j]
                        a[piv, j] = x
                inv = _inv_mod(a[r, c], p)
                nnz = 0
                for j in range(c, nc):
                    x = a[r, j]
                    if x != 0:
                        if inv != 1:
                            x = x * inv % p
                            a[r, j] = x
                        cols[nnz] = j
                        nnz += 1
                for i in range(nr):
                    if i == r:
                        continue
                    f = a[i, c]
                    if f == 0:
                        continue
                    f = p - f
                    for k in range(nnz):
                        j = cols[k]
                        a[i, j] = (a[i, j] + f * a[r, j]) % p
                with gil:
                    pivots.append(c)
                r += 1
    finally:
        free(cols)
    return pivots


def rref_gf2k(long long[:, ::1] a, long long[::1] log, long long[::1] exp, long long order):
    """Same as :func:`rref_mod_p` for GF(2^k) given log/antilog tables."""
    cdef Py_ssize_t nr = a.shape[0], nc = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k, piv, nnz
    cdef long long lf, x, linv
    cdef long long group = order - 1
    cdef Py_ssize_t *cols
    pivots = []
    if nr == 0 or nc == 0:
        return pivots
    cols = <Py_ssize_t *> malloc(nc * sizeof(Py_ssize_t))
    if cols == NULL:
        raise MemoryError()
    try:
        with nogil:
            for c in range(nc):
                if r == nr:
                    break
                piv = -1
                for i in range(r, nr):
                    if a[i, c] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != r:
                    for j in range(c, nc):
                        x = a[r, j]
                        a[r, j] = a[piv, j]
                        a[piv, j] = x
                linv = group - log[a[r, c]]
                nnz = 0
                for j in range(c, nc):
                    x = a[r, j]
                    if x != 0:
                        x = exp[log[x] + linv]
                        a[r, j] = x
                        cols[nnz] = j
                        nnz += 1
                for i in range(nr):
                    if i == r:
                        continue
                    x = a[i, c]
                    if x == 0:
                        continue
                    lf = log[x]
                    for k in range(nnz):
                        j = cols[k]
                        a[i, j] ^= exp[lf + log[a[r, j]]]
                with gil:
                    pivots.append(c)
                r += 1
    finally:
        free(cols)
    return pivots
