"""Exact elimination-based classification of polynomial geometry statements."""

from .classifier import (Report, Statement, Verdict, classify, generally_false_test,
                         generally_true_test)
from .dimension import hilbert_dimension, is_independent_set, maximal_independent_set
from .errors import (ConstructionError, InvariantViolation, NotIndependentError,
                     NotZeroDimensionalError, ParseError, PartruthError,
                     ResourceLimitExceeded, RingMismatchError, TrivialIdealError)
from .geomdsl import compile_construction, compile_script, parse_construction
from .groebner import (GroebnerBasis, Ideal, elimination_ideal, groebner_basis,
                       ideal_intersection, ideal_membership, ideal_quotient, is_trivial,
                       saturation)
from .limits import resource_limits
from .polyring import MonomialOrder, Polynomial, Ring, parse_polynomial
from .zwsoracle import (ZeroDivisorStatus, extend_to_function_field, radical,
                        radical_zero_dimensional, zero_divisor_status, zws_test)

__all__ = [
    "Report", "Statement", "Verdict", "classify", "generally_false_test",
    "generally_true_test", "hilbert_dimension", "is_independent_set",
    "maximal_independent_set", "ConstructionError", "InvariantViolation",
    "NotIndependentError", "NotZeroDimensionalError", "ParseError", "PartruthError",
    "ResourceLimitExceeded", "RingMismatchError", "TrivialIdealError",
    "compile_construction", "compile_script", "parse_construction", "GroebnerBasis",
    "Ideal", "elimination_ideal", "groebner_basis", "ideal_intersection",
    "ideal_membership", "ideal_quotient", "is_trivial", "saturation", "resource_limits",
    "MonomialOrder", "Polynomial", "Ring", "parse_polynomial", "ZeroDivisorStatus",
    "extend_to_function_field", "radical", "radical_zero_dimensional",
    "zero_divisor_status", "zws_test",
]

__version__ = "0.1.0"
