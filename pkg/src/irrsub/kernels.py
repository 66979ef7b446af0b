"""Selects the compiled Freudenthal kernel when it is built, else the Python one.

Set ``IRRSUB_PURE_PYTHON=1`` to force the Python implementation.
"""

import os

from . import _kernels_py

BACKEND = "python"
dominant_multiplicities = _kernels_py.dominant_multiplicities

if not os.environ.get("IRRSUB_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        dominant_multiplicities = _compiled.dominant_multiplicities
        BACKEND = "cython"

__all__ = ["BACKEND", "dominant_multiplicities"]
