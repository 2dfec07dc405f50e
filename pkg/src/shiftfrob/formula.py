"""Frobenius numbers of <a, a+1^2, a+2^2, ...> without enumerating the semigroup."""
from __future__ import annotations

from typing import Optional

from .errors import DomainError, HypothesisFailure
from .result import Branch, FrobeniusResult, Method
from .squares import is_legendre_form, is_sum_of_two_squares, iota, strip_fours


def _admissible(a: int, r: int) -> bool:
    return iota(r) == 4 and iota(a + r) >= 3 and iota(2 * a + r) >= 2


def max_r(a: int) -> Optional[int]:
    """Largest r in [1, a-1] with iota(r) = 4, iota(a+r) >= 3, iota(2a+r) >= 2."""
    a = int(a)
    if a < 2:
        raise DomainError(f"max_r needs a >= 2, got {a}")
    for r in range(a - 1, 0, -1):
        if _admissible(a, r):
            return r
    return None


def frobenius_via_max_r(a: int) -> FrobeniusResult:
    r = max_r(a)
    if r is None:
        raise HypothesisFailure(a)
    return FrobeniusResult(3 * a + r, Method.MAX_R, a=a, witness_r=r)


def _check_multiple_of_4(a: int) -> int:
    a = int(a)
    if a < 8 or a % 4:
        raise DomainError(f"needs a >= 8 with 4 | a, got {a}")
    return a


def max_r_bounds_check(a: int) -> bool:
    """max_r(a) is a-1 when 8 | a, and one of a-5, a-4 when a = 4 mod 8."""
    a = _check_multiple_of_4(a)
    r = max_r(a)
    if a % 8 == 0:
        return r == a - 1
    return r in (a - 5, a - 4)


def frobenius_closed_form(a: int) -> FrobeniusResult:
    a = _check_multiple_of_4(a)
    if a % 8 == 0:
        return FrobeniusResult(4 * a - 1, Method.CLOSED_FORM, a=a, branch=Branch.B8)
    # a - 4 is a positive multiple of 8 here, so its 4-adic part is never trivial
    if not is_legendre_form(a - 4) or is_sum_of_two_squares(2 * a - 4):
        return FrobeniusResult(4 * a - 5, Method.CLOSED_FORM, a=a, branch=Branch.B4_MINUS5)
    return FrobeniusResult(4 * a - 4, Method.CLOSED_FORM, a=a, branch=Branch.B4_MINUS4)


def legendre_exponent(n: int) -> Optional[int]:
    """e with n = 4^e (8m + 7), or None when n has no such form."""
    e, core = strip_fours(n)
    return e if core % 8 == 7 else None
