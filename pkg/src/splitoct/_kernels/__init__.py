"""Kernel backend selection.

The compiled Cython kernels are used when the extension built; otherwise
(or when SPLITOCT_PURE is set in the environment) the numpy fallback
takes over.  Both expose the same functions and produce identical
floating-point output, which tests assert.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("SPLITOCT_PURE"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _cykernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

multiply_batch = _impl.multiply_batch
dirac_batch = _impl.dirac_batch

__all__ = ["BACKEND", "multiply_batch", "dirac_batch", "_pykernels"]
