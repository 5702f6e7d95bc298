"""Exact numerics of coherent systems on polarized nodal reducible curves."""

from .curve import NodalCurve, Polarization
from .errors import DocumentError, NodalError, PreconditionError, ValidationError
from .sheaf import DepthOneNumerics

__all__ = [
    "NodalCurve",
    "Polarization",
    "DepthOneNumerics",
    "NodalError",
    "ValidationError",
    "PreconditionError",
    "DocumentError",
]
__version__ = "0.1.0"
