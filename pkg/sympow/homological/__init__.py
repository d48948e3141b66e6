# sympow/homological/__init__.py
from .hilbert import (
    betti_numerator,
    hilbert_function,
    hilbert_numerator,
    monomial_numerator,
    numerator_coefficients,
    staircase_count,
)
from .predicates import PredicateSet, StrongCM, predicates
from .resolution import Resolution, depth, resolve

__all__ = [
    "Resolution",
    "resolve",
    "depth",
    "PredicateSet",
    "StrongCM",
    "predicates",
    "hilbert_numerator",
    "monomial_numerator",
    "betti_numerator",
    "hilbert_function",
    "staircase_count",
    "numerator_coefficients",
]
