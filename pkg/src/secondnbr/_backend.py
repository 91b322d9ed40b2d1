"""Kernel backend selection.

Set ``SECONDNBR_PURE_NUMPY=1`` to force the numpy/Python kernels even when
numba is importable. The flag is read once at import time.
"""

import os

ENV_FLAG = "SECONDNBR_PURE_NUMPY"

_forced_off = os.environ.get(ENV_FLAG, "").strip().lower() in ("1", "true", "yes", "on")

try:
    if _forced_off:
        raise ImportError
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def backend_name() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
