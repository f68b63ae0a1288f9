# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; results are bit-identical to ``_pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


def power_table(const i64[::1] exp, const i64[::1] log, i64 e, i64 zero_value):
    cdef Py_ssize_t q = log.shape[0], x
    cdef i64 m = exp.shape[0]
    out = np.empty(q, dtype=np.int64)
    cdef i64[::1] o = out
    o[0] = zero_value
    for x in range(1, q):
        o[x] = exp[(log[x] * e) % m]
    return out


def difference_counts(const i64[::1] table, const i64[::1] shift, i64 p, int n):
    cdef Py_ssize_t q = table.shape[0], x
    cdef i64 u, v, b, place, du, dv
    cdef int i
    counts = np.zeros(q, dtype=np.int64)
    cdef i64[::1] c = counts
    for x in range(q):
        u = table[shift[x]]
        v = table[x]
        b = 0
        place = 1
        for i in range(n):
            du = u % p
            dv = v % p
            u //= p
            v //= p
            du -= dv
            if du < 0:
                du += p
            b += du * place
            place *= p
        c[b] += 1
    return counts


def polymulmod(const i64[::1] a, const i64[::1] b, i64 p):
    cdef Py_ssize_t q = a.shape[0], i, j
    cdef i64 ai
    acc = np.zeros(2 * q - 1, dtype=np.int64)
    cdef i64[::1] s = acc
    for i in range(q):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(q):
            s[i + j] += ai * b[j]
        # keep partial sums bounded for long inputs
        if (i & 1023) == 1023:
            for j in range(2 * q - 1):
                s[j] %= p
    out = np.empty(q, dtype=np.int64)
    cdef i64[::1] o = out
    for i in range(q):
        o[i] = s[i]
    for i in range(q, 2 * q - 1):
        o[i - q + 1] += s[i]
    for i in range(q):
        o[i] %= p
    return out
