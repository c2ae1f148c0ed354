"""Multigraded Poincaré series of monomial rings k[x]/I.

The central object is the denominator polynomial b_R(x, z) with
P^R_k(x, z) = prod(1 + x_i z) / b_R(x, z).
"""

from .errors import MonoringError
from .homology import GF2, RATIONALS, FieldSpec, LaurentGF, rank, reduced_homology_gf
from .monomials import GeneratorSet, normalize_generators, parse_monomial
from .polyring import MultiPoly, TruncatedSeries
from .poincare import (
    betti_numerator,
    degree_stats,
    denominator,
    denominator_via_deviations,
    denominator_via_intervals,
    golod_via_criterion,
    is_golod,
    poincare_series,
    polarize,
)
from .cli import parse_ideal

__all__ = [
    "FieldSpec", "GF2", "RATIONALS", "LaurentGF", "GeneratorSet", "MonoringError", "MultiPoly",
    "TruncatedSeries", "betti_numerator", "degree_stats", "denominator", "denominator_via_deviations",
    "denominator_via_intervals", "golod_via_criterion", "is_golod", "normalize_generators",
    "parse_ideal", "parse_monomial", "poincare_series", "polarize", "rank", "reduced_homology_gf",
]
