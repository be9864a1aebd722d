"""Exact computations with split mixed Tate motives: Schur functors, vanishing,
the lambda-ring K_0 = Z[tau, 1/tau], zeta functions and representation-ring
valued lambda operations."""
from .graded import (
    GradedTateObject,
    augmentation,
    d_minus,
    d_plus,
    direct_sum,
    generator,
    gr_bar,
    gr_n,
    k0_class,
    parse_expression,
    preset,
    shift,
    tensor,
    twist,
    weight_above,
    weight_below,
)
from .k0_lambda import (
    RationalSeries,
    RepSeries,
    lambda_i,
    lambda_sigma,
    lambda_t,
    product_formula_check,
    schur_op,
    verify_lambda_ring,
    zeta,
    zeta_rational,
)
from .laurent import LaurentPolynomial, parse_laurent
from .oracle import graded_schur_oracle, young_symmetrizer_rank
from .partitions import (
    Partition,
    contains_rectangle,
    diagram_contains,
    irreducible_dimension,
    parse_partition,
    partitions_of,
    transpose,
)
from .rep_ring import RepRingElement, induction_product, lr_coefficient, mn_character
from .schur import alt_power, classify, schur_apply, schur_vanishes, sym_power
from .series import TruncatedSeries

__all__ = [
    "GradedTateObject",
    "augmentation",
    "d_minus",
    "d_plus",
    "direct_sum",
    "generator",
    "gr_bar",
    "gr_n",
    "k0_class",
    "parse_expression",
    "preset",
    "shift",
    "tensor",
    "twist",
    "weight_above",
    "weight_below",
    "RationalSeries",
    "RepSeries",
    "lambda_i",
    "lambda_sigma",
    "lambda_t",
    "product_formula_check",
    "schur_op",
    "verify_lambda_ring",
    "zeta",
    "zeta_rational",
    "LaurentPolynomial",
    "parse_laurent",
    "graded_schur_oracle",
    "young_symmetrizer_rank",
    "Partition",
    "contains_rectangle",
    "diagram_contains",
    "irreducible_dimension",
    "parse_partition",
    "partitions_of",
    "transpose",
    "RepRingElement",
    "induction_product",
    "lr_coefficient",
    "mn_character",
    "alt_power",
    "classify",
    "schur_apply",
    "schur_vanishes",
    "sym_power",
    "TruncatedSeries",
]

__version__ = "0.1.0"
