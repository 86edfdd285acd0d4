"""Optional numba acceleration.

Hot kernels are written once in the numba-compatible subset of Python and
decorated with :func:`njit` from this module. Setting ``RESLAT_DISABLE_JIT=1``
(or running without numba installed) leaves them as plain Python functions
operating on numpy arrays.
"""

import os

_DISABLED = os.environ.get("RESLAT_DISABLE_JIT", "").strip().lower() in ("1", "true", "yes", "on")

try:
    if _DISABLED:
        raise ImportError
    import numba

    HAS_NUMBA = True
except ImportError:
    numba = None
    HAS_NUMBA = False

JIT_ENABLED = HAS_NUMBA and not _DISABLED


def njit(fn=None, **kwargs):
    """``numba.njit(cache=True)`` when the JIT is enabled, identity otherwise."""
    kwargs.setdefault("cache", True)

    def wrap(f):
        if JIT_ENABLED:
            return numba.njit(**kwargs)(f)
        return f

    if fn is None:
        return wrap
    return wrap(fn)
