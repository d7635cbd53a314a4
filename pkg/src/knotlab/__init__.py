"""knotlab: exact quantum knot invariants and volume-conjecture numerics."""

from .laurent import LaurentHalf

__all__ = ["LaurentHalf"]
__version__ = "0.1.0"
