# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: checked int64 transforms plus object-array loops.

The int64 kernels implement the hot transform passes over dense
``2**n`` tables with hardware overflow detection (an overflow raises
instead of wrapping).  The ``*_obj`` kernels run the same loops over
Python lists of arbitrary exact integers (``int`` or ``gmpy2.mpz``),
stripping interpreter overhead from the big-integer pipelines.

Pass order matches ``subsetconv._pykernels`` exactly, so both backends
produce bitwise-identical results.
"""

import numpy as np

from .errors import InexactDivisionError, RingOverflowError

COMPILED = True

cdef extern from *:
    """
    #include <stdint.h>
    static inline int sc_add_ovf(int64_t a, int64_t b, int64_t *r)
        { return __builtin_add_overflow(a, b, r); }
    static inline int sc_sub_ovf(int64_t a, int64_t b, int64_t *r)
        { return __builtin_sub_overflow(a, b, r); }
    static inline int sc_mul_ovf(int64_t a, int64_t b, int64_t *r)
        { return __builtin_mul_overflow(a, b, r); }
    static inline int sc_popcount(uint64_t x)
        { return __builtin_popcountll(x); }
    """
    int sc_add_ovf(long long a, long long b, long long *r) nogil
    int sc_sub_ovf(long long a, long long b, long long *r) nogil
    int sc_mul_ovf(long long a, long long b, long long *r) nogil
    int sc_popcount(unsigned long long x) nogil


cdef inline void _raise_overflow() except *:
    raise RingOverflowError("i64 overflow in compiled kernel")


def zeta_i64(long long[::1] v, int n):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t x, bit
    cdef int j, ovf = 0
    cdef long long r
    for j in range(n):
        bit = (<Py_ssize_t>1) << j
        for x in range(size):
            if x & bit:
                ovf |= sc_add_ovf(v[x ^ bit], v[x], &r)
                v[x] = r
    if ovf:
        _raise_overflow()


def mobius_i64(long long[::1] v, int n):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t x, bit
    cdef int j, ovf = 0
    cdef long long r
    for j in range(n):
        bit = (<Py_ssize_t>1) << j
        for x in range(size):
            if x & bit:
                ovf |= sc_sub_ovf(v[x], v[x ^ bit], &r)
                v[x] = r
    if ovf:
        _raise_overflow()


def wht_i64(long long[::1] v, int n):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t x, bit
    cdef int j, ovf = 0
    cdef long long a, b, r, s
    for j in range(n):
        bit = (<Py_ssize_t>1) << j
        for x in range(size):
            if not (x & bit):
                a = v[x]
                b = v[x | bit]
                ovf |= sc_add_ovf(a, b, &r)
                ovf |= sc_sub_ovf(a, b, &s)
                v[x] = r
                v[x | bit] = s
    if ovf:
        _raise_overflow()


def wht_inverse_i64(long long[::1] v, int n):
    wht_i64(v, n)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef long long low = ((<long long>1) << n) - 1
    cdef Py_ssize_t x
    for x in range(size):
        if v[x] & low:
            raise InexactDivisionError(
                f"inverse transform value {v[x]} at mask {x} is not divisible by 2**{n}"
            )
        v[x] = v[x] >> n


def mul_i64(long long[::1] a, long long[::1] b):
    cdef Py_ssize_t size = a.shape[0]
    out_arr = np.empty(size, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t x
    cdef int ovf = 0
    cdef long long r
    for x in range(size):
        ovf |= sc_mul_ovf(a[x], b[x], &r)
        out[x] = r
    if ovf:
        _raise_overflow()
    return out_arr


def sub_i64(long long[::1] a, long long[::1] b):
    cdef Py_ssize_t size = a.shape[0]
    out_arr = np.empty(size, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t x
    cdef int ovf = 0
    cdef long long r
    for x in range(size):
        ovf |= sc_sub_ovf(a[x], b[x], &r)
        out[x] = r
    if ovf:
        _raise_overflow()
    return out_arr


def subset_convolve_i64(long long[::1] f, long long[::1] g, int n):
    """Fused ranked transform / rank convolution / ranked inversion."""
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    a_arr = np.zeros((n + 1, size), dtype=np.int64)
    b_arr = np.zeros((n + 1, size), dtype=np.int64)
    out_arr = np.zeros(size, dtype=np.int64)
    acc_arr = np.empty(size, dtype=np.int64)
    cdef long long[:, ::1] a = a_arr
    cdef long long[:, ::1] b = b_arr
    cdef long long[::1] out = out_arr
    cdef long long[::1] acc = acc_arr
    cdef Py_ssize_t x, bit
    cdef int k, j, ovf = 0
    cdef long long r, p

    for x in range(size):
        k = sc_popcount(<unsigned long long>x)
        a[k, x] = f[x]
        b[k, x] = g[x]

    for k in range(n + 1):
        for j in range(n):
            bit = (<Py_ssize_t>1) << j
            for x in range(size):
                if x & bit:
                    ovf |= sc_add_ovf(a[k, x ^ bit], a[k, x], &r)
                    a[k, x] = r
                    ovf |= sc_add_ovf(b[k, x ^ bit], b[k, x], &r)
                    b[k, x] = r
    if ovf:
        _raise_overflow()

    for k in range(n + 1):
        for x in range(size):
            acc[x] = 0
        for j in range(k + 1):
            for x in range(size):
                ovf |= sc_mul_ovf(a[j, x], b[k - j, x], &p)
                ovf |= sc_add_ovf(acc[x], p, &r)
                acc[x] = r
        if ovf:
            _raise_overflow()
        for j in range(n):
            bit = (<Py_ssize_t>1) << j
            for x in range(size):
                if x & bit:
                    ovf |= sc_sub_ovf(acc[x], acc[x ^ bit], &r)
                    acc[x] = r
        if ovf:
            _raise_overflow()
        for x in range(size):
            if sc_popcount(<unsigned long long>x) == k:
                out[x] = acc[x]
    return out_arr


# -- object kernels (values are arbitrary exact integers) --


def zeta_obj(list vals, int n):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t x, bit
    cdef int j
    for j in range(n):
        bit = (<Py_ssize_t>1) << j
        for x in range(size):
            if x & bit:
                vals[x] = vals[x ^ bit] + vals[x]


def mobius_obj(list vals, int n):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t x, bit
    cdef int j
    for j in range(n):
        bit = (<Py_ssize_t>1) << j
        for x in range(size):
            if x & bit:
                vals[x] = vals[x] - vals[x ^ bit]


def mul_obj(list a, list b):
    cdef Py_ssize_t size = len(a)
    cdef Py_ssize_t x
    cdef list out = [None] * size
    for x in range(size):
        out[x] = a[x] * b[x]
    return out


def sub_obj(list a, list b):
    cdef Py_ssize_t size = len(a)
    cdef Py_ssize_t x
    cdef list out = [None] * size
    for x in range(size):
        out[x] = a[x] - b[x]
    return out


def mul_add_obj(list acc, list a, list b):
    cdef Py_ssize_t size = len(acc)
    cdef Py_ssize_t x
    for x in range(size):
        acc[x] = acc[x] + a[x] * b[x]


def embed_pow_obj(long long[::1] vals, long long sentinel, list powtab):
    cdef Py_ssize_t size = vals.shape[0]
    cdef Py_ssize_t x
    cdef list out = [None] * size
    zero = powtab[0] - powtab[0]
    for x in range(size):
        if vals[x] == sentinel:
            out[x] = zero
        else:
            out[x] = powtab[vals[x]]
    return out
