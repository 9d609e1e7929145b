# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: batched octonion products and operator sums.

Must stay numerically identical to _pykernels: same (i, j) accumulation
order, same association of the sign/coefficient products.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def multiply_batch(const cnp.int64_t[:, ::1] signs, const cnp.int64_t[:, ::1] targets,
                   const double[:, ::1] a, const double[:, ::1] b):
    """Row-wise algebra product of (n, 8) coefficient arrays."""
    cdef Py_ssize_t n = a.shape[0]
    cdef cnp.ndarray[double, ndim=2] out_arr = np.zeros((n, 8), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t r, i, j
    cdef double ai
    for r in range(n):
        for i in range(8):
            ai = a[r, i]
            for j in range(8):
                out[r, targets[i, j]] += signs[i, j] * ai * b[r, j]
    return out_arr


def dirac_batch(const cnp.int64_t[:, ::1] signs, const cnp.int64_t[:, ::1] targets,
                const cnp.int64_t[::1] basis, const double[:, :, ::1] dcoeffs):
    """sum_mu e_{basis[mu]} * dcoeffs[:, mu, :] for (n, nmu, 8) input."""
    cdef Py_ssize_t n = dcoeffs.shape[0]
    cdef Py_ssize_t nmu = dcoeffs.shape[1]
    cdef cnp.ndarray[double, ndim=2] out_arr = np.zeros((n, 8), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t r, m, j
    cdef cnp.int64_t bi
    for m in range(nmu):
        bi = basis[m]
        for r in range(n):
            for j in range(8):
                out[r, targets[bi, j]] += signs[bi, j] * dcoeffs[r, m, j]
    return out_arr
