"""Exact computations for invariant connections on reductive homogeneous
spaces carrying an invariant symplectic form."""
from .catalog import EXAMPLE_NAMES, load_example
from .conn import (
    NATURAL,
    ZERO_ONE,
    curvature,
    natural_product,
    nomizu_product,
    ricci,
    zero_one_product,
)
from .exactla import Mat, Q
from .liealg import LieAlgebra
from .redspace import ReductiveSpace, SymplecticSpace

__version__ = "0.1.0"

__all__ = [
    "EXAMPLE_NAMES",
    "LieAlgebra",
    "Mat",
    "NATURAL",
    "Q",
    "ReductiveSpace",
    "SymplecticSpace",
    "ZERO_ONE",
    "curvature",
    "load_example",
    "natural_product",
    "nomizu_product",
    "ricci",
    "zero_one_product",
]
