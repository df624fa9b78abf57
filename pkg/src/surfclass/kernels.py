"""Backend selection for the hot loops.

The compiled extension is used when it imports; setting
``SURFCLASS_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

BACKEND = "python"

if os.environ.get("SURFCLASS_PURE_PYTHON", "") not in ("", "0"):
    from ._kernels_py import complement_labels, enumerate_solutions, trace_curves
else:
    try:
        from ._kernels import complement_labels, enumerate_solutions, trace_curves

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import complement_labels, enumerate_solutions, trace_curves

__all__ = ["BACKEND", "complement_labels", "enumerate_solutions", "trace_curves"]
