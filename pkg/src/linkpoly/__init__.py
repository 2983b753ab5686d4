"""Exact Tutte and Jones polynomials of link families in Conway notation."""

from .poly import LaurentPoly1, LaurentPoly2, geom_sum, swap_xy, substitute_thistlethwaite
from .graphcore import MultiGraph, block_decompose, canonical_key
from .tutte import tutte, tutte_uncached

__all__ = [
    "LaurentPoly1",
    "LaurentPoly2",
    "geom_sum",
    "swap_xy",
    "substitute_thistlethwaite",
    "MultiGraph",
    "block_decompose",
    "canonical_key",
    "tutte",
    "tutte_uncached",
]
