"""Certified approximation of the top eigenvalue of sparse Majorana Hamiltonians."""

from ._fermapprox import (
    CapExceeded,
    GuaranteeViolation,
    Hamiltonian,
    Solution,
    ValidationError,
    approximate,
    audit,
    lambda_max,
    multiply_monomials,
    optimality_family,
    parse_instance,
    parse_solution,
    random_instance,
    serialize_solution,
    verify,
)

__all__ = [
    "CapExceeded",
    "GuaranteeViolation",
    "Hamiltonian",
    "Solution",
    "ValidationError",
    "approximate",
    "audit",
    "lambda_max",
    "multiply_monomials",
    "optimality_family",
    "parse_instance",
    "parse_solution",
    "random_instance",
    "serialize_solution",
    "verify",
]
