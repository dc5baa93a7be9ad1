"""Exact toolkit for 4-generated numerical semigroups and their Pfaffian structure."""

from .algebra import Binomial, Monomial, Polynomial, SignedMonomial, det, pfaffian4, weighted_degree
from .semigroup import (
    NumericalSemigroup,
    apery_set,
    contains,
    frobenius,
    gap_profile,
    geq_h,
    is_symmetric,
    make_semigroup,
    parse_semigroup,
)
from .structure import canonical_frame, normalize_to_template, build_matrix, verify_structure
from .toric import alpha_data, betti_elements, factorizations, is_complete_intersection, minimal_generating_set, mu

__all__ = [
    "Binomial",
    "Monomial",
    "NumericalSemigroup",
    "Polynomial",
    "SignedMonomial",
    "alpha_data",
    "apery_set",
    "betti_elements",
    "build_matrix",
    "canonical_frame",
    "contains",
    "det",
    "factorizations",
    "frobenius",
    "gap_profile",
    "geq_h",
    "is_complete_intersection",
    "is_symmetric",
    "make_semigroup",
    "minimal_generating_set",
    "mu",
    "normalize_to_template",
    "parse_semigroup",
    "pfaffian4",
    "verify_structure",
    "weighted_degree",
]
