"""Exact algebra for quadratic Sylvester-Gallai configurations.

The package decides radical membership, classifies pencils of quadratic
forms, checks Sylvester-Gallai style incidence conditions and zero-tests
small sums of products of quadratics, all in exact rational arithmetic.
"""

from .errors import NotDivisibleError, PreconditionError, QuadSGError, ResourceLimitExceeded
from .pit import Circuit, expand_zero_test, gate_radical_report, schwartz_zippel_test, variable_reduction
from .polyring import Budget, MultiPoly, groebner, radical_member, radical_query, resultant
from .projection import ProjectionMap, apply, sample_alpha
from .qcore import (
    LinearForm,
    LinearSpace,
    QuadraticForm,
    minimal_representation,
    minimal_space,
    rank_s,
    restrict,
    span_dimension,
)
from .sg import check_delta_sg, check_ek, check_main_condition, check_sg_linear, make_qo_dominated
from .structure import classify, common_isotropic_plane, gupta_reduce, isotropic_plane, reducible_members

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "Circuit",
    "LinearForm",
    "LinearSpace",
    "MultiPoly",
    "NotDivisibleError",
    "PreconditionError",
    "ProjectionMap",
    "QuadSGError",
    "QuadraticForm",
    "ResourceLimitExceeded",
    "apply",
    "check_delta_sg",
    "check_ek",
    "check_main_condition",
    "check_sg_linear",
    "classify",
    "common_isotropic_plane",
    "expand_zero_test",
    "gate_radical_report",
    "groebner",
    "gupta_reduce",
    "isotropic_plane",
    "make_qo_dominated",
    "minimal_representation",
    "minimal_space",
    "radical_member",
    "radical_query",
    "rank_s",
    "reducible_members",
    "resultant",
    "restrict",
    "sample_alpha",
    "schwartz_zippel_test",
    "span_dimension",
    "variable_reduction",
]
