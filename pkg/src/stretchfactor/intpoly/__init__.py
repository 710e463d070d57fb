"""Exact integer polynomials: arithmetic, root location, classification, certificates."""

from .circle import RootLocation, inverse_trace_transform, outside_radius, trace_transform, unit_circle_location
from .classify import (
    IrreducibilityCertificate,
    NumberClass,
    NumberTag,
    Verdict,
    classify_number,
    prove_irreducible_one_big_root,
)
from .cyclotomic import cyclotomic, cyclotomic_factors, strip_cyclotomic, totient
from .families import TORUS_ANOSOV, p_g, salem_family_poly, shifted_family_poly
from .poly import (
    IntPoly,
    divexact,
    divides,
    is_palindromic,
    poly_arith,
    poly_gcd,
    reciprocal,
    squarefree_decomposition,
    squarefree_part,
)
from .power import power_min_poly, power_sums
from .roots import (
    AlgebraicReal,
    approx,
    cauchy_bound,
    format_decimal,
    isolate_real_roots,
    largest_real_root,
    real_root_count,
    sturm_count,
)

__all__ = [
    "AlgebraicReal",
    "IntPoly",
    "IrreducibilityCertificate",
    "NumberClass",
    "NumberTag",
    "RootLocation",
    "TORUS_ANOSOV",
    "Verdict",
    "approx",
    "cauchy_bound",
    "classify_number",
    "cyclotomic",
    "cyclotomic_factors",
    "divexact",
    "divides",
    "format_decimal",
    "inverse_trace_transform",
    "is_palindromic",
    "isolate_real_roots",
    "largest_real_root",
    "outside_radius",
    "p_g",
    "poly_arith",
    "poly_gcd",
    "power_min_poly",
    "power_sums",
    "prove_irreducible_one_big_root",
    "real_root_count",
    "reciprocal",
    "salem_family_poly",
    "shifted_family_poly",
    "squarefree_decomposition",
    "squarefree_part",
    "strip_cyclotomic",
    "sturm_count",
    "totient",
    "trace_transform",
    "unit_circle_location",
]
