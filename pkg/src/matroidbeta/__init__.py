"""Exact beta-invariants and Ehrhart polynomials of matroid base polytopes."""

from .ehrhart import (
    EhrhartGuardError,
    count_lattice_points,
    count_lattice_points_filtered,
    derivative_at,
    ehrhart_polynomial,
    linear_coeff_shifted,
    shift_by_minus_one,
)
from .invariants import (
    HypothesisViolation,
    VerificationRecord,
    beta_definition,
    beta_delcon,
    normalization_constant,
    verify_main_theorem,
)
from .lattice_paths import (
    LatticePath,
    SkewShape,
    cell_poset,
    enumerate_snake_paths,
    enumerate_snakes,
    is_border_strip,
    is_connected_lpm,
    lattice_path_matroid,
    lies_below,
    parse_shape,
)
from .matroids import (
    InvalidBasesError,
    Matroid,
    coloops,
    connected_components,
    contract,
    delete,
    direct_sum,
    format_matroid,
    is_connected,
    loops,
    parse_matroid,
    rank,
    uniform,
    validate_bases,
)
from .polynomials import RationalPolynomial, lagrange_interpolate
from .posets import (
    Poset,
    count_order_preserving_maps,
    count_order_preserving_maps_brute,
    order_polynomial,
    parse_poset,
)

__version__ = "0.1.0"

__all__ = [
    "EhrhartGuardError",
    "HypothesisViolation",
    "InvalidBasesError",
    "LatticePath",
    "Matroid",
    "Poset",
    "RationalPolynomial",
    "SkewShape",
    "VerificationRecord",
    "beta_definition",
    "beta_delcon",
    "cell_poset",
    "coloops",
    "connected_components",
    "contract",
    "count_lattice_points",
    "count_lattice_points_filtered",
    "count_order_preserving_maps",
    "count_order_preserving_maps_brute",
    "delete",
    "derivative_at",
    "direct_sum",
    "ehrhart_polynomial",
    "enumerate_snake_paths",
    "enumerate_snakes",
    "format_matroid",
    "is_border_strip",
    "is_connected",
    "is_connected_lpm",
    "lagrange_interpolate",
    "lattice_path_matroid",
    "lies_below",
    "linear_coeff_shifted",
    "loops",
    "normalization_constant",
    "order_polynomial",
    "parse_matroid",
    "parse_poset",
    "parse_shape",
    "rank",
    "shift_by_minus_one",
    "uniform",
    "validate_bases",
    "verify_main_theorem",
]
