# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Typed-memoryview kernels; semantics match the pure NumPy versions exactly."""

from libc.stdint cimport uint32_t

import numpy as np


def bm25_accumulate(const uint32_t[::1] doc_ids, const uint32_t[::1] tfs,
                    const uint32_t[::1] field_lens, double idf, double k1,
                    double b, double avglen, double[::1] out):
    cdef Py_ssize_t i, n = doc_ids.shape[0]
    cdef uint32_t d
    cdef double tf, denom
    for i in range(n):
        d = doc_ids[i]
        tf = <double> tfs[i]
        denom = tf + k1 * (1.0 - b + b * (<double> field_lens[d] / avglen))
        out[d] += (idf * tf * (k1 + 1.0)) / denom


def shifted_intersect(const uint32_t[::1] a, const uint32_t[::1] b,
                      unsigned long delta):
    cdef Py_ssize_t i = 0, j = 0, k = 0
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0]
    cdef unsigned long long target
    out_arr = np.empty(na, dtype=np.uint32)
    cdef uint32_t[::1] out = out_arr
    while i < na and j < nb:
        target = <unsigned long long> a[i] + delta
        if <unsigned long long> b[j] < target:
            j += 1
        elif <unsigned long long> b[j] > target:
            i += 1
        else:
            out[k] = a[i]
            k += 1
            i += 1
            j += 1
    return out_arr[:k]
