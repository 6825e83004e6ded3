"""Exact bigraded dimension polynomials of bounded-exponent quotient rings,
computed four independent ways, with verification suites for the identities
relating them."""

from .algebra import (BinomialFactor, ExpansionRegionError, LaurentPoly,
                      ParameterError, Params, RationalFn, Series,
                      divide_exact, expand_factor, expand_rational,
                      first_difference, rational_add, series_mul)
from .bosonic import (VertexContribution, andrews_gordon_check, bosonic_sum,
                      cone_generators, grouped_closed_form,
                      grouped_contribution, select_case,
                      singular_contribution, vertex_contribution,
                      vertex_coordinates, vertex_series)
from .fermionic import (GordonData, fermionic_sum, fermionic_term,
                        gaussian_binomial, gordon_data, identity_lhs_term)
from .polyhedral import (default_cutoff, degree_bounds, enumerate_basis,
                         hilbert_by_enumeration, hilbert_by_transfer,
                         recursion_rhs, reflect_check, reflect_transform)
from .quotient import (IdealGeneratorSet, graded_dimension, hilbert_by_quotient,
                       ideal_generators)

__all__ = [
    "BinomialFactor", "ExpansionRegionError", "LaurentPoly", "ParameterError",
    "Params", "RationalFn", "Series", "divide_exact", "expand_factor",
    "expand_rational", "first_difference", "rational_add", "series_mul",
    "VertexContribution", "andrews_gordon_check", "bosonic_sum",
    "cone_generators", "grouped_closed_form", "grouped_contribution",
    "select_case", "singular_contribution", "vertex_contribution",
    "vertex_coordinates", "vertex_series",
    "GordonData", "fermionic_sum", "fermionic_term", "gaussian_binomial",
    "gordon_data", "identity_lhs_term",
    "default_cutoff", "degree_bounds", "enumerate_basis",
    "hilbert_by_enumeration", "hilbert_by_transfer", "recursion_rhs",
    "reflect_check", "reflect_transform",
    "IdealGeneratorSet", "graded_dimension", "hilbert_by_quotient",
    "ideal_generators",
]

__version__ = "0.1.0"
