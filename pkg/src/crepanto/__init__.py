"""Exact toric computations for crepant resolutions of abelian quotient
singularities: Hilbert bases, junior-simplex triangulations, the necessary
existence criterion, intersection numbers and blow-up factorizations."""

__version__ = "0.1.0"

from .cyclic import CyclicQuotientType
from .lattices import LatticePoint, WeightLattice
from .series import SeriesType

__all__ = [
    "CyclicQuotientType",
    "LatticePoint",
    "SeriesType",
    "WeightLattice",
    "__version__",
]
