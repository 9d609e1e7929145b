"""Pure-numpy kernels, the fallback when the compiled extension is absent.

Accumulation happens in the same (i, j) order as the Cython version, one
vectorized slice update per table entry, so both backends produce
identical floating-point results.
"""

from __future__ import annotations

import numpy as np


def multiply_batch(signs: np.ndarray, targets: np.ndarray,
                   a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise algebra product of (n, 8) coefficient arrays."""
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    out = np.zeros_like(a)
    for i in range(8):
        for j in range(8):
            out[:, targets[i, j]] += signs[i, j] * a[:, i] * b[:, j]
    return out


def dirac_batch(signs: np.ndarray, targets: np.ndarray,
                basis: np.ndarray, dcoeffs: np.ndarray) -> np.ndarray:
    """sum_mu e_{basis[mu]} * dcoeffs[:, mu, :] for (n, nmu, 8) input."""
    dcoeffs = np.ascontiguousarray(dcoeffs, dtype=np.float64)
    n, nmu, _ = dcoeffs.shape
    out = np.zeros((n, 8), dtype=np.float64)
    for m in range(nmu):
        bi = int(basis[m])
        for j in range(8):
            out[:, targets[bi, j]] += signs[bi, j] * dcoeffs[:, m, j]
    return out
