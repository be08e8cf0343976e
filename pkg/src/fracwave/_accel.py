"""Numba switch.

The compiled kernels are used when numba imports and ``FRACWAVE_DISABLE_NUMBA``
is unset (or ``0``). Set ``FRACWAVE_DISABLE_NUMBA=1`` before importing
:mod:`fracwave` to force the pure-numpy path.
"""
import os

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

HAVE_NUMBA = numba is not None


def _disabled_by_env():
    flag = os.environ.get("FRACWAVE_DISABLE_NUMBA", "").strip().lower()
    return flag not in ("", "0", "false", "no")


USE_NUMBA = HAVE_NUMBA and not _disabled_by_env()


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
