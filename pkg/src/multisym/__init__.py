"""Multisymmetric polynomials over GF(p).

Exact sparse arithmetic in a p x n matrix of variables, the divided-power
and shuffle calculus of symmetric tensors, Newton-identity and
polarization rewrites, a Frobenius splitting on the orbit-sum basis,
GF(p) span computations for membership and minimal-generator questions,
and machine-checkable certificates that p-th powers of power sums lie in
the algebra generated by the elementary multisymmetric polynomials.
"""

from .certify import (
    CertStep, Certificate, certify_power_sum, certify_pth_power,
    certificate_diff, expand_certificate, replay_matches, replay_trace,
    verify,
)
from .errors import CapExceeded, SelfCheckError
from .expressions import ParseError, parse_expression, recognize
from .exptuples import (
    ExpTuple, degree, exp_tuple, format_tuple, length, parse_tuple, unit,
)
from .invariants import (
    SymTensor, elementary, elementary_column, gamma, is_invariant, orbit_min,
    orbit_sum, power_sum, row_monomial, row_orbit, shuffle,
)
from .operators import (
    PolarizationOp, check_newton_tilde, flatten_tuple, frobenius_split,
    newton_rewrite, polarize, polarize_elementary,
    power_to_elementary_one_column, validate_polarization_closed_form,
)
from .poly import MAX_PRIME, Monomial, Poly, frobenius, validate_prime
from .selftest import SuiteResult, format_results, run_selftest
from .spans import (
    DEFAULT_CAP, GradedDimReport, SpanBasis, gamma_basis, gl_span,
    ideal_truncation_span, in_p_algebra, orbit_reps, p_algebra_generators,
    p_algebra_span, p_multidegree_span, square_ideal_quotient, square_span,
)
from .witness import WitnessReport, witness_check

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "CertStep", "Certificate", "DEFAULT_CAP", "ExpTuple",
    "GradedDimReport", "MAX_PRIME", "Monomial", "ParseError", "Poly",
    "PolarizationOp", "SelfCheckError", "SpanBasis", "SuiteResult",
    "SymTensor", "WitnessReport", "certificate_diff", "certify_power_sum",
    "certify_pth_power", "check_newton_tilde", "degree", "elementary",
    "elementary_column", "exp_tuple", "expand_certificate", "flatten_tuple",
    "format_results", "format_tuple", "frobenius", "frobenius_split",
    "gamma", "gamma_basis", "gl_span", "ideal_truncation_span",
    "in_p_algebra", "is_invariant", "length", "newton_rewrite", "orbit_min",
    "orbit_reps", "orbit_sum", "p_algebra_generators", "p_algebra_span",
    "p_multidegree_span", "parse_expression", "parse_tuple", "polarize",
    "polarize_elementary", "power_sum", "power_to_elementary_one_column",
    "recognize", "replay_matches", "replay_trace", "row_monomial",
    "row_orbit", "run_selftest", "shuffle", "square_ideal_quotient",
    "square_span", "unit", "validate_polarization_closed_form",
    "validate_prime", "verify", "witness_check",
]
