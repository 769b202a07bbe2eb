"""Exact brute-force oracle: dual pair actions on truncated polynomial spaces."""

from .analysis import (
    BracketEntry,
    BracketReport,
    DEFAULT_BUDGET,
    GradedOperator,
    HarmonicReport,
    MinorCertificate,
    build_buckets,
    build_operators,
    harmonic_isotypic_dims,
    harmonic_report,
    hwv_multiplicities,
    hwv_table,
    minor_hwv,
    verify_brackets,
)
from .configs import (
    FULL,
    MOD_IDEAL,
    MatrixSpaceShape,
    ProductO,
    SpaceConfig,
    build_config,
    build_product_config,
)
from .poly import Operator, apply_operator, apply_to_monomial, monomials_of_degree

__all__ = [
    "BracketEntry",
    "BracketReport",
    "DEFAULT_BUDGET",
    "FULL",
    "GradedOperator",
    "HarmonicReport",
    "MOD_IDEAL",
    "MatrixSpaceShape",
    "MinorCertificate",
    "Operator",
    "ProductO",
    "SpaceConfig",
    "apply_operator",
    "apply_to_monomial",
    "build_buckets",
    "build_config",
    "build_operators",
    "build_product_config",
    "harmonic_isotypic_dims",
    "harmonic_report",
    "hwv_multiplicities",
    "hwv_table",
    "minor_hwv",
    "monomials_of_degree",
    "verify_brackets",
]
