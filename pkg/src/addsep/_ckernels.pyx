# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled int64 versions of the kernels in ``_kernels_py``.

Arithmetic is checked; any overflow raises ``OverflowError`` and the caller
falls back to the arbitrary-precision Python kernels.
"""
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

ctypedef long long i64

cdef extern from *:
    """
    static inline int ak_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int ak_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int ak_mul(i64 a, i64 b, i64 *r) nogil
    int ak_sub(i64 a, i64 b, i64 *r) nogil


cdef inline i64 _gcd(i64 a, i64 b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef i64* _load(list rows, Py_ssize_t nr, Py_ssize_t nc) except NULL:
    cdef i64* a = <i64*> malloc(max(nr * nc, 1) * sizeof(i64))
    cdef Py_ssize_t i, j
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(nr):
            row = rows[i]
            if len(row) != nc:
                raise ValueError("ragged matrix")
            for j in range(nc):
                a[i * nc + j] = row[j]
    except BaseException:
        free(a)
        raise
    return a


# combine(x, y) = (g*x - f*y) / d, checked. Returns 1 on overflow.
cdef inline int _comb(i64 g, i64 x, i64 f, i64 y, i64 d, i64* out) nogil:
    cdef i64 t1, t2, t
    if ak_mul(g, x, &t1) or ak_mul(f, y, &t2) or ak_sub(t1, t2, &t):
        return 1
    out[0] = t // d
    return 0


def bareiss_rank(list rows):
    cdef Py_ssize_t nr = len(rows)
    if nr == 0:
        return 0
    cdef Py_ssize_t nc = len(rows[0])
    cdef i64* a = _load(rows, nr, nc)
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef i64 prev = 1, piv, f, tmp
    cdef int bad = 0
    with nogil:
        for c in range(nc):
            if r == nr:
                break
            p = r
            while p < nr and a[p * nc + c] == 0:
                p += 1
            if p == nr:
                continue
            if p != r:
                for j in range(c, nc):
                    tmp = a[p * nc + j]
                    a[p * nc + j] = a[r * nc + j]
                    a[r * nc + j] = tmp
            piv = a[r * nc + c]
            for i in range(r + 1, nr):
                f = a[i * nc + c]
                for j in range(c + 1, nc):
                    if _comb(piv, a[i * nc + j], f, a[r * nc + j], prev, &a[i * nc + j]):
                        bad = 1
                        break
                if bad:
                    break
                a[i * nc + c] = 0
            if bad:
                break
            prev = piv
            r += 1
    free(a)
    if bad:
        raise OverflowError("int64 overflow in Bareiss elimination")
    return r


def first_dependent(list rows, Py_ssize_t nmain):
    cdef Py_ssize_t nr = len(rows)
    if nr == 0:
        return [], None
    cdef Py_ssize_t nc = len(rows[0])
    cdef Py_ssize_t w = nc + nr          # row entries followed by tracking
    cdef i64* src = _load(rows, nr, nc)
    cdef i64* bas = <i64*> malloc(nr * w * sizeof(i64))
    cdef i64* cur = <i64*> malloc(w * sizeof(i64))
    cdef Py_ssize_t* piv = <Py_ssize_t*> malloc(nr * sizeof(Py_ssize_t))
    cdef Py_ssize_t* idx = <Py_ssize_t*> malloc(nr * sizeof(Py_ssize_t))
    cdef Py_ssize_t nb = 0, i, b, j, p, pivot
    cdef i64 f, g, d
    cdef int bad = 0, dep = -1, nonzero_tail
    if bas == NULL or cur == NULL or piv == NULL or idx == NULL:
        free(src); free(bas); free(cur); free(piv); free(idx)
        raise MemoryError()
    with nogil:
        for i in range(nr):
            memcpy(cur, &src[i * nc], nc * sizeof(i64))
            for j in range(nr):
                cur[nc + j] = 0
            cur[nc + i] = 1
            for b in range(nb):
                p = piv[b]
                f = cur[p]
                if f == 0:
                    continue
                g = bas[b * w + p]
                d = _gcd(g, f)
                g = g // d
                f = f // d
                for j in range(w):
                    if _comb(g, cur[j], f, bas[b * w + j], 1, &cur[j]):
                        bad = 1
                        break
                if bad:
                    break
                d = 0
                for j in range(w):
                    if cur[j]:
                        d = _gcd(d, cur[j])
                        if d == 1:
                            break
                if d > 1:
                    for j in range(w):
                        cur[j] = cur[j] // d
            if bad:
                break
            pivot = -1
            for j in range(nmain):
                if cur[j]:
                    pivot = j
                    break
            if pivot < 0:
                nonzero_tail = 0
                for j in range(nmain, nc):
                    if cur[j]:
                        nonzero_tail = 1
                        break
                if nmain == nc or nonzero_tail:
                    dep = <int> i
                    break
                continue
            memcpy(&bas[nb * w], cur, w * sizeof(i64))
            piv[nb] = pivot
            idx[nb] = i
            nb += 1
    try:
        if bad:
            raise OverflowError("int64 overflow in incremental elimination")
        basis = [(idx[b], piv[b], [bas[b * w + j] for j in range(nc)]) for b in range(nb)]
        if dep >= 0:
            dependency = (dep, [cur[nc + j] for j in range(nr)],
                          [cur[j] for j in range(nmain, nc)])
        else:
            dependency = None
        return basis, dependency
    finally:
        free(src); free(bas); free(cur); free(piv); free(idx)
