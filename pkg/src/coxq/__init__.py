"""Exact Poincare-type series of affine symmetric and universal Coxeter groups.

The hot enumeration kernels (affine length, ball enumeration) come from a
compiled extension when it is available and fall back to pure Python
otherwise; :data:`KERNEL_BACKEND` names the active one.
"""

from coxq._kernels import BACKEND as KERNEL_BACKEND
from coxq.series import DEFAULT_ORDER, BivarSeries, Series, SeriesError, TrivarPoly

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "DEFAULT_ORDER",
    "BivarSeries",
    "Series",
    "SeriesError",
    "TrivarPoly",
]
