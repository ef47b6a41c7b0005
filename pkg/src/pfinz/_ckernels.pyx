# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled set-arithmetic kernels; drop-in twin of ``pfinz._pykernels``."""

from libc.stdlib cimport malloc, calloc, free, qsort

from pfinz.errors import IntegerOverflow

ctypedef long long i64

cdef extern from *:
    """
    static int pfinz_add_overflow(long long a, long long b, long long *out) {
        return __builtin_add_overflow(a, b, out);
    }
    static int pfinz_sub_overflow(long long a, long long b, long long *out) {
        return __builtin_sub_overflow(a, b, out);
    }
    """
    int pfinz_add_overflow(i64 a, i64 b, i64 *out) nogil
    int pfinz_sub_overflow(i64 a, i64 b, i64 *out) nogil


cdef i64* _load(tuple values, Py_ssize_t *n) except NULL:
    cdef Py_ssize_t i, m = len(values)
    cdef i64 *buf = <i64*> malloc((m if m > 0 else 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            buf[i] = values[i]
    except OverflowError:
        free(buf)
        raise IntegerOverflow("input does not fit in 64 bits")
    n[0] = m
    return buf


cdef tuple _dump(i64 *buf, Py_ssize_t n):
    cdef Py_ssize_t i
    out = [None] * n
    for i in range(n):
        out[i] = buf[i]
    return tuple(out)


cdef i64 _extremes(i64 *xs, Py_ssize_t nx, i64 *ys, Py_ssize_t ny) except? -1:
    # all pairwise sums lie between the two extreme sums
    cdef i64 lo, hi
    if pfinz_add_overflow(xs[0], ys[0], &lo) or pfinz_add_overflow(xs[nx - 1], ys[ny - 1], &hi):
        raise IntegerOverflow("sumset leaves the 64-bit range")
    return lo


cdef int _cmp(const void *p, const void *q) noexcept nogil:
    cdef i64 a = (<const i64*> p)[0], b = (<const i64*> q)[0]
    return (a > b) - (a < b)


cdef tuple _merge(i64 *xs, Py_ssize_t nx, i64 *ys, Py_ssize_t ny):
    # sparse path: all pairwise sums, sorted, then deduplicated in place
    cdef Py_ssize_t cap = nx * ny, i, j, k = 0
    cdef i64 *sums = <i64*> malloc(cap * sizeof(i64))
    if sums == NULL:
        raise MemoryError()
    try:
        for i in range(nx):
            for j in range(ny):
                sums[k] = xs[i] + ys[j]
                k += 1
        qsort(sums, cap, sizeof(i64), _cmp)
        k = 1
        for i in range(1, cap):
            if sums[i] != sums[k - 1]:
                sums[k] = sums[i]
                k += 1
        return _dump(sums, k)
    finally:
        free(sums)


cdef tuple _bitset(i64 *xs, Py_ssize_t nx, i64 *ys, Py_ssize_t ny, i64 base, i64 span):
    cdef unsigned char *marks = <unsigned char*> calloc(span + 1, 1)
    cdef Py_ssize_t i, j, count = 0
    cdef i64 x0 = xs[0], y0 = ys[0], off
    if marks == NULL:
        raise MemoryError()
    try:
        for i in range(nx):
            off = xs[i] - x0
            for j in range(ny):
                marks[off + ys[j] - y0] = 1
        out = []
        for i in range(span + 1):
            if marks[i]:
                out.append(base + i)
        return tuple(out)
    finally:
        free(marks)


def sumset_merge(tuple xs, tuple ys):
    cdef Py_ssize_t nx, ny
    cdef i64 *a = _load(xs, &nx)
    cdef i64 *b = NULL
    try:
        b = _load(ys, &ny)
        _extremes(a, nx, b, ny)
        return _merge(a, nx, b, ny)
    finally:
        free(a)
        free(b)


def sumset_bitset(tuple xs, tuple ys):
    cdef Py_ssize_t nx, ny
    cdef i64 *a = _load(xs, &nx)
    cdef i64 *b = NULL
    cdef i64 base
    try:
        b = _load(ys, &ny)
        base = _extremes(a, nx, b, ny)
        return _bitset(a, nx, b, ny, base, (a[nx - 1] + b[ny - 1]) - base)
    finally:
        free(a)
        free(b)


def sumset(tuple xs, tuple ys, i64 threshold):
    cdef Py_ssize_t nx, ny
    cdef i64 *a = _load(xs, &nx)
    cdef i64 *b = NULL
    cdef i64 base, sx, sy, span
    try:
        b = _load(ys, &ny)
        base = _extremes(a, nx, b, ny)
        if (not pfinz_sub_overflow(a[nx - 1], a[0], &sx)
                and not pfinz_sub_overflow(b[ny - 1], b[0], &sy)
                and not pfinz_add_overflow(sx, sy, &span)
                and span < threshold):
            return _bitset(a, nx, b, ny, base, span)
        return _merge(a, nx, b, ny)
    finally:
        free(a)
        free(b)


def translate(tuple xs, i64 k):
    cdef Py_ssize_t n, i
    cdef i64 *a = _load(xs, &n)
    cdef i64 lo, hi
    try:
        if pfinz_add_overflow(a[0], k, &lo) or pfinz_add_overflow(a[n - 1], k, &hi):
            raise IntegerOverflow("translation leaves the 64-bit range")
        for i in range(n):
            a[i] += k
        return _dump(a, n)
    finally:
        free(a)


def negate(tuple xs):
    cdef Py_ssize_t n, i
    cdef i64 *a = _load(xs, &n)
    cdef i64 neg
    try:
        if pfinz_sub_overflow(0, a[0], &neg):
            raise IntegerOverflow("negation leaves the 64-bit range")
        out = [None] * n
        for i in range(n):
            out[i] = -a[n - 1 - i]
        return tuple(out)
    finally:
        free(a)
