"""Hot kernels, dispatched to numba or numpy (see :mod:`fracwave._accel`).

``green_kernel``  closed-form G_alpha over arrays
``laux_kernel``   auxiliary profile L_alpha over arrays
``lpow_integral`` adaptive GK15 for int_0^inf tau^beta L_alpha(tau)^2 dtau

Both implementations stay importable as ``numpy_impl`` and ``numba_impl``
(the latter is ``None`` without numba) so they can be compared directly.
"""
from fracwave._accel import HAVE_NUMBA, USE_NUMBA
from fracwave.kernels import _numpy as numpy_impl

if HAVE_NUMBA:
    from fracwave.kernels import _numba as numba_impl
else:  # pragma: no cover
    numba_impl = None

_impl = numba_impl if USE_NUMBA else numpy_impl

green_kernel = _impl.green_kernel
laux_kernel = _impl.laux_kernel
lpow_integral = _impl.lpow_integral

__all__ = ["green_kernel", "laux_kernel", "lpow_integral", "numpy_impl", "numba_impl"]
