"""Hot numeric loops, compiled with numba when available.

Set ``UNITCHARGE_DISABLE_NUMBA=1`` to force the pure-numpy path. Both
backends stay importable as ``numpy_backend`` / ``numba_backend`` so they
can be compared directly.
"""
import os

from . import _numpy as numpy_backend

J0, COSINE = numpy_backend.J0, numpy_backend.COSINE
REAL, IMAGINARY = numpy_backend.REAL, numpy_backend.IMAGINARY

numba_backend = None
if os.environ.get("UNITCHARGE_DISABLE_NUMBA", "").strip().lower() not in ("1", "true", "yes", "on"):
    try:
        from . import _numba as numba_backend
    except ImportError:  # numba missing or broken for this interpreter
        numba_backend = None

_impl = numba_backend if numba_backend is not None else numpy_backend
BACKEND = "numba" if numba_backend is not None else "numpy"

lorentzian_sum = _impl.lorentzian_sum
inverse_power_sum = _impl.inverse_power_sum
panel_integrals = _impl.panel_integrals

__all__ = [
    "BACKEND",
    "lorentzian_sum",
    "inverse_power_sum",
    "panel_integrals",
    "numpy_backend",
    "numba_backend",
]
