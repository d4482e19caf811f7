"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
twin. Set ``QKL_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("QKL_PURE_PYTHON", "") not in ("", "0"):
    from qkl._kernels_py import *  # noqa: F401,F403
else:
    try:
        from qkl._kernels import *  # noqa: F401,F403

        BACKEND = "cython"
    except ImportError:
        from qkl._kernels_py import *  # noqa: F401,F403

__all__ = [
    "BACKEND",
    "add",
    "content",
    "eval_homogeneous",
    "eval_int",
    "exact_quo",
    "mul",
    "prem",
    "scale",
    "strip",
    "sub",
]
