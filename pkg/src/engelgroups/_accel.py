"""Backend selection for the hot kernels.

Set ``ENGELGROUPS_BACKEND=numpy`` to force the vectorised numpy path;
``numba`` (or unset) uses the JIT kernels when numba is importable.
"""

from __future__ import annotations

import logging
import os

logger = logging.getLogger(__name__)

BACKEND_ENV = "ENGELGROUPS_BACKEND"

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    HAVE_NUMBA = False


def _select() -> str:
    wanted = os.environ.get(BACKEND_ENV, "numba").strip().lower()
    if wanted not in ("numba", "numpy"):
        logger.warning("%s=%r not understood, using numba", BACKEND_ENV, wanted)
        wanted = "numba"
    if wanted == "numba" and not HAVE_NUMBA:
        logger.warning("numba unavailable, falling back to numpy kernels")
        wanted = "numpy"
    return wanted


BACKEND = _select()


def njit(fn):
    """``numba.njit(cache=True)`` when numba is importable, identity otherwise."""
    if HAVE_NUMBA:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn
