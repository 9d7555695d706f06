"""Mahler measures of group-ring elements over a catalogue of groups.

The measure of 1 - lambda*P is defined through the walk counts
a_n = [P^n]_0 of the weighted Cayley graph; over finite groups it reduces
to a normalized log-determinant, over infinite groups to a power series,
and several families admit closed forms.  See README.md for an overview
and the command-line interface in `grmahler.cli`.
"""

from .coeffs import GaussianRational
from .errors import (
    DomainError,
    GrmahlerError,
    GroupMismatchError,
    InfiniteGroupError,
    NonConvergenceError,
    ParseError,
    ResourceLimitError,
    SingularMatrixError,
)
from .groups import (
    AbelianProduct,
    Dicyclic,
    Dihedral,
    Free,
    FreeProductCyclic,
)
from .parsing import parse_group, parse_poly, parse_poly_over
from .ring import RingElement, ring_element

__version__ = "0.1.0"

__all__ = [
    "AbelianProduct",
    "Dicyclic",
    "Dihedral",
    "DomainError",
    "Free",
    "FreeProductCyclic",
    "GaussianRational",
    "GrmahlerError",
    "GroupMismatchError",
    "InfiniteGroupError",
    "NonConvergenceError",
    "ParseError",
    "ResourceLimitError",
    "RingElement",
    "SingularMatrixError",
    "parse_group",
    "parse_poly",
    "parse_poly_over",
    "ring_element",
    "__version__",
]
