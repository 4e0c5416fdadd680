"""Backend selection for the word kernels.

The compiled extension is used when it imports; setting ``ARTIFACT_PURE=1``
forces the pure-Python implementation.
"""
from __future__ import annotations

import os

BACKEND = "python"
if os.environ.get("ARTIFACT_PURE", "") not in ("1", "true", "yes"):
    try:
        from ._kernels import apply_images, dehn_reduce, free_reduce  # type: ignore
        BACKEND = "cython"
    except ImportError:  # extension not built
        pass
if BACKEND == "python":
    from ._pykernels import apply_images, dehn_reduce, free_reduce  # noqa: F401

__all__ = ["BACKEND", "apply_images", "dehn_reduce", "free_reduce"]
