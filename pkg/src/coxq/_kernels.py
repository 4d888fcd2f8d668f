"""Select the compiled kernels when importable, else the pure-Python ones.

Set ``COXQ_PURE_PYTHON=1`` to force the fallback.
"""

import os

from coxq._kernels_py import EnumerationLimitError

if os.environ.get("COXQ_PURE_PYTHON", "") not in ("", "0"):
    from coxq import _kernels_py as impl
    BACKEND = "python"
else:
    try:
        from coxq import _ckernels as impl
        BACKEND = "cython"
    except ImportError:
        from coxq import _kernels_py as impl
        BACKEND = "python"

window_length = impl.window_length
has_descent = impl.has_descent
right_mult = impl.right_mult
ball_levels = impl.ball_levels


def max_ball() -> int:
    """Enumeration cap from ``COXQ_MAX_BALL`` (default 5,000,000)."""
    return int(os.environ.get("COXQ_MAX_BALL", "5000000"))


__all__ = [
    "BACKEND",
    "EnumerationLimitError",
    "window_length",
    "has_descent",
    "right_mult",
    "ball_levels",
    "max_ball",
]
