"""Exact arithmetic kernel: fields, polynomials, matrices, normal forms."""

from .fields import DEFAULT_PRIME, GF, QQ, Field, PrimeField, Rationals, field_from_json, parse_field
from .matrix import (Matrix, adjugate, berkowitz, char_poly, companion, det, eval_poly_at_matrix,
                     inverse_over_field, inverse_unimodular, poly_matrix)
from .normal_forms import (bareiss_det, hermite_form, invariant_factors, is_smith_form, lattice_equal,
                           lattice_length, resultant, smith_normal_form, sylvester_matrix)
from .poly import (Poly, PolyRing, content, evaluate_x, gcd_over_fraction_field, partial_x, poly_gcd,
                   poly_lcm, poly_ring, poly_xgcd, primitive_part, pseudo_rem, squarefree_part,
                   squarefree_part_over_fraction_field)
from .ratfunc import RationalFunctionField, RatFunc, fraction_field

__all__ = [
    "DEFAULT_PRIME", "GF", "QQ", "Field", "PrimeField", "Rationals", "field_from_json", "parse_field",
    "Matrix", "adjugate", "berkowitz", "char_poly", "companion", "det", "eval_poly_at_matrix",
    "inverse_over_field", "inverse_unimodular", "poly_matrix",
    "bareiss_det", "hermite_form", "invariant_factors", "is_smith_form", "lattice_equal",
    "lattice_length", "resultant", "smith_normal_form", "sylvester_matrix",
    "Poly", "PolyRing", "content", "evaluate_x", "gcd_over_fraction_field", "partial_x", "poly_gcd",
    "poly_lcm", "poly_ring", "poly_xgcd", "primitive_part", "pseudo_rem", "squarefree_part",
    "squarefree_part_over_fraction_field",
    "RationalFunctionField", "RatFunc", "fraction_field",
]
