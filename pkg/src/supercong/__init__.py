"""Exact per-prime verification of truncated hypergeometric supercongruences."""

from .combinatorics import PrimeContext, binomial, factorial, fermat_quotient, harmonic, pochhammer
from .exact import PrimePowerModulus, Residue, congruent, padic_valuation, reduce_mod
from .suite.registry import CheckResult, DomainError, UnknownCheck, manifest, run_check
from .theorems import section_reduction_residual, truncated_sum, verify

__all__ = [
    "PrimeContext", "binomial", "factorial", "fermat_quotient", "harmonic", "pochhammer",
    "PrimePowerModulus", "Residue", "congruent", "padic_valuation", "reduce_mod",
    "CheckResult", "DomainError", "UnknownCheck", "manifest", "run_check",
    "section_reduction_residual", "truncated_sum", "verify",
]
