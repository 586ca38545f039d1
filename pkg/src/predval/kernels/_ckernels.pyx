# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset kernels over float64 coalition tables.

Same contracts as ``_pykernels``; loops run without the GIL.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

NAME = "cython"


cdef inline void _pair_pass(double[::1] o, int i, int sign, bint upward) noexcept nogil:
    # visits every (S, S | bit) pair once, block by block
    cdef Py_ssize_t step = (<Py_ssize_t>1) << i, blocks = o.shape[0] >> (i + 1), b, base, k
    for b in range(blocks):
        base = b << (i + 1)
        if upward:
            for k in range(base, base + step):
                o[k + step] += sign * o[k]
        else:
            for k in range(base, base + step):
                o[k] += o[k + step]


def subset_zeta(const double[::1] a, int n):
    out = np.array(a, dtype=np.float64, copy=True)
    cdef double[::1] o = out
    cdef int i
    with nogil:
        for i in range(n):
            _pair_pass(o, i, 1, True)
    return out


def subset_mobius(const double[::1] a, int n):
    out = np.array(a, dtype=np.float64, copy=True)
    cdef double[::1] o = out
    cdef int i
    with nogil:
        for i in range(n):
            _pair_pass(o, i, -1, True)
    return out


def superset_zeta(const double[::1] a, int n):
    out = np.array(a, dtype=np.float64, copy=True)
    cdef double[::1] o = out
    cdef int i
    with nogil:
        for i in range(n):
            _pair_pass(o, i, 1, False)
    return out


def weighted_worth(weights, double quota):
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    cdef int n = w.shape[0]
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n, s, half
    cdef int i
    totals_arr = np.zeros(size, dtype=np.float64)
    out_arr = np.empty(size, dtype=np.float64)
    cdef double[::1] totals = totals_arr
    cdef double[::1] out = out_arr
    with nogil:
        # same doubling order as the numpy path, so sums round identically
        for i in range(n):
            half = (<Py_ssize_t>1) << i
            for s in range(half):
                totals[s + half] = totals[s] + w[i]
        for s in range(size):
            out[s] = 1.0 if totals[s] >= quota else 0.0
    return out_arr


def split_sums(const double[::1] a, int n):
    inside_arr = np.zeros(n, dtype=np.float64)
    outside_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] inside = inside_arr
    cdef double[::1] outside = outside_arr
    cdef Py_ssize_t size = a.shape[0], step, b, base, k
    cdef int i
    cdef double lo, hi
    with nogil:
        for i in range(n):
            step = (<Py_ssize_t>1) << i
            lo = 0.0
            hi = 0.0
            for b in range(size >> (i + 1)):
                base = b << (i + 1)
                for k in range(base, base + step):
                    lo += a[k]
                    hi += a[k + step]
            outside[i] = lo
            inside[i] = hi
    return inside_arr, outside_arr


def marginal_inside(const double[::1] v, const double[::1] w, int n):
    """``sum over S containing i of w[S] (v[S] - v[S - i])``."""
    out_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t size = v.shape[0], step, b, base, k
    cdef int i
    cdef double acc
    with nogil:
        for i in range(n):
            step = (<Py_ssize_t>1) << i
            acc = 0.0
            for b in range(size >> (i + 1)):
                base = b << (i + 1)
                for k in range(base, base + step):
                    acc += w[k + step] * (v[k + step] - v[k])
            out[i] = acc
    return out_arr


def marginal_outside(const double[::1] v, const double[::1] w, int n):
    """``sum over S without i of w[S] (v[S + i] - v[S])``."""
    out_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t size = v.shape[0], step, b, base, k
    cdef int i
    cdef double acc
    with nogil:
        for i in range(n):
            step = (<Py_ssize_t>1) << i
            acc = 0.0
            for b in range(size >> (i + 1)):
                base = b << (i + 1)
                for k in range(base, base + step):
                    acc += w[k] * (v[k + step] - v[k])
            out[i] = acc
    return out_arr


def popcounts(int n):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n, s
    out_arr = np.empty(size, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    with nogil:
        out[0] = 0
        for s in range(1, size):
            out[s] = out[s >> 1] + (s & 1)
    return out_arr
