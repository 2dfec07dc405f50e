"""Frobenius numbers of the shifted-square semigroups <a, a+1^2, a+2^2, ...>."""
from ._accel import BACKEND
from .errors import CapacityError, DomainError, HypothesisFailure, ShiftFrobError
from .formula import frobenius_closed_form, frobenius_via_max_r, max_r, max_r_bounds_check
from .result import Branch, FrobeniusResult, Method
from .scan import ScanRecord, ScanReport, empirical_max_r_profile, scan_range
from .semigroup import (
    AperySet,
    GeneratorSet,
    apery_set,
    contains,
    frobenius_bruteforce,
    frobenius_sieve,
    gaps,
    shifted_square_generators,
)
from .squares import (
    Factorization,
    SquareDecomposition,
    SquaresClass,
    classify,
    decompose,
    factorize,
    iota,
    iota_oracle,
    is_perfect_square,
    is_sum_of_three_squares,
    is_sum_of_two_squares,
    two_square_witness,
)

__version__ = "0.1.0"
