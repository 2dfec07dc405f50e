"""Backend selection for the numeric kernels.

Set ``SHIFTFROB_DISABLE_NUMBA=1`` before import to force the pure-numpy
kernels, e.g. on platforms without a working llvmlite.
"""
import os

_FLAG = "SHIFTFROB_DISABLE_NUMBA"


def _env_disabled() -> bool:
    return os.environ.get(_FLAG, "").strip().lower() not in ("", "0", "false", "no")


try:
    if _env_disabled():
        raise ImportError("numba disabled by " + _FLAG)
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        # bare @njit and @njit(...) both reduce to the identity
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn


BACKEND = "numba" if HAS_NUMBA else "numpy"
