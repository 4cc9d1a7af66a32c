"""Skein-theoretic evaluation of SU(2) Chern-Simons Wilson loops."""

from .bracket import (
    a_value,
    bracket_by_enumeration,
    bracket_float,
    bracket_polynomial,
    kauffman_bracket,
    root_order,
    state_histogram,
)
from .cyclotomic import CyclotomicInteger, cyclotomic_polynomial
from .expectation import CSExpectation, cs_expectation, framing_factor, quantum_dimension

RootOfUnityScalar = CyclotomicInteger

__all__ = [
    "CSExpectation",
    "CyclotomicInteger",
    "RootOfUnityScalar",
    "a_value",
    "bracket_by_enumeration",
    "bracket_float",
    "bracket_polynomial",
    "cs_expectation",
    "cyclotomic_polynomial",
    "framing_factor",
    "kauffman_bracket",
    "quantum_dimension",
    "root_order",
    "state_histogram",
]
