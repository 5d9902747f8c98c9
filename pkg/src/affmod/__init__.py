"""Exact computer algebra for affine modification surface rings."""

from .scalars import QQ, PrimeField, RationalField, field_from_spec
from .poly import (
    GREVLEX,
    LEX,
    LinearDecomposition,
    MonomialOrder,
    MultiPoly,
    Ring,
    distinct_root_count,
    divide_multi,
    exact_div,
    gcd_univariate,
    leading_term,
    linear_decompose,
    ring,
    squarefree_part,
    weighted_order,
)
from .parse import (
    FractionExpr,
    ParseError,
    format_expr,
    format_poly,
    parse_fraction,
    parse_poly,
)
from .ideals import (
    INFINITE,
    Ideal,
    buchberger_gb,
    colength,
    ideals_equal,
    is_point_ideal,
    normal_form,
)
from .rings import (
    PresentedRing,
    RingMap,
    SamuelReport,
    b1_swap_automorphism,
    build_Bn,
    build_C1,
    build_C2,
    build_modification,
    element_equal_in_quotient,
    samuel_check,
    verify_ring_map,
)
from .fibers import (
    AFFINE_LINE,
    EMPTY,
    CurveClass,
    classify_curve,
    expected_fiber_class,
    fiber_poly,
    fiber_table,
    punctured_line,
    union,
)
from .degrees import (
    LocalizedFraction,
    WeightDegree,
    check_F0_properties,
    fraction,
    negative_degree_implies_y_divisible,
    probe_nonnegativity,
    valuation_degree,
    weight_degree,
)
from .report import VerificationReport

__version__ = "0.1.0"
