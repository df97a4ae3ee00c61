"""Polynomial arithmetic, Groebner bases, resultants and radical membership."""

from .factor import factor_gram, factor_rank2
from .groebner import Budget, GroebnerBasis, groebner
from .poly import MultiPoly, parse_poly, product
from .radical import RadicalAnswer, radical_member, radical_query
from .resultant import resultant, share_factor_in, sylvester_matrix

__all__ = [
    "Budget",
    "GroebnerBasis",
    "MultiPoly",
    "RadicalAnswer",
    "factor_gram",
    "factor_rank2",
    "groebner",
    "parse_poly",
    "product",
    "radical_member",
    "radical_query",
    "resultant",
    "share_factor_in",
    "sylvester_matrix",
]
