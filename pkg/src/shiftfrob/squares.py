"""Sums of squares: the minimal count of positive squares summing to n.

The fast path classifies n arithmetically (perfect square, two-square
criterion on the factorization, Legendre's 4^r(8t+7) form).  The oracle
path is an exhaustive dynamic program and is meant for tests and
cross-checks only; it refuses inputs above ``oracle_cap()``.
"""
from __future__ import annotations

import enum
import math
import os
import threading
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import CapacityError, DomainError

ORACLE_CAP_ENV = "SHIFTFROB_ORACLE_CAP"
DEFAULT_ORACLE_CAP = 10**7


class SquaresClass(enum.Enum):
    """The four mutually exclusive types; values are the type numbers 1-4."""

    PERFECT_SQUARE = 1
    TWO_SQUARES = 2
    FOUR_SQUARES = 3
    THREE_SQUARES = 4

    @property
    def iota(self) -> int:
        return _IOTA_OF[self]


_IOTA_OF = {
    SquaresClass.PERFECT_SQUARE: 1,
    SquaresClass.TWO_SQUARES: 2,
    SquaresClass.FOUR_SQUARES: 4,
    SquaresClass.THREE_SQUARES: 3,
}


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def product(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


@dataclass(frozen=True)
class SquareDecomposition:
    n: int
    parts: tuple[int, ...]


def _check_positive(n: int) -> int:
    n = int(n)
    if n < 1:
        raise DomainError(f"expected a positive integer, got {n}")
    return n


def is_perfect_square(n: int) -> bool:
    n = _check_positive(n)
    s = math.isqrt(n)
    return s * s == n


# first 12 primes as Miller-Rabin bases: deterministic below 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> Factorization:
    """Trial division by 2, 3 and then 6k +/- 1.

    Stops as soon as the cofactor is prime, so only inputs with two large
    prime factors are slow.
    """
    n = _check_positive(n)
    m = n
    factors = []
    for p in (2, 3):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            factors.append((p, e))
    p, step = 5, 2
    prime_checked = False
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
            prime_checked = False
        elif not prime_checked and p > 1000:
            # cheap to skip for small m; pays off on large prime cofactors
            if is_prime(m):
                break
            prime_checked = True
        p += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_sum_of_two_squares(n: int) -> bool:
    """x^2 + y^2 = n with x, y allowed to be zero (so squares qualify)."""
    return all(e % 2 == 0 for p, e in factorize(n).factors if p % 4 == 3)


def two_square_witness(n: int) -> tuple[int, int] | None:
    """Some (x, y) with x >= y >= 0 and x^2 + y^2 = n, found by direct search."""
    n = _check_positive(n)
    for y in range(math.isqrt(n // 2) + 1):
        x2 = n - y * y
        x = math.isqrt(x2)
        if x * x == x2:
            return x, y
    return None


def strip_fours(n: int) -> tuple[int, int]:
    """Return (e, m) with n = 4**e * m and 4 not dividing m."""
    n = _check_positive(n)
    e = 0
    while n % 4 == 0:
        n //= 4
        e += 1
    return e, n


def is_legendre_form(n: int) -> bool:
    """True iff n = 4^r (8t + 7) for some r, t >= 0."""
    return strip_fours(n)[1] % 8 == 7


def is_sum_of_three_squares(n: int) -> bool:
    return not is_legendre_form(n)


def classify(n: int) -> SquaresClass:
    # the order of these tests is what makes the four types disjoint
    if is_perfect_square(n):
        return SquaresClass.PERFECT_SQUARE
    if is_sum_of_two_squares(n):
        return SquaresClass.TWO_SQUARES
    if not is_sum_of_three_squares(n):
        return SquaresClass.FOUR_SQUARES
    return SquaresClass.THREE_SQUARES


def iota(n: int) -> int:
    return classify(n).iota


def oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_CAP


class _OracleTable:
    """Grow-only cache of the exhaustive table; readers get a snapshot."""

    def __init__(self):
        self._lock = threading.Lock()
        self._table = np.zeros(1, dtype=np.int8)

    def get(self, n: int) -> np.ndarray:
        table = self._table
        if n < table.shape[0]:
            return table
        with self._lock:
            if n >= self._table.shape[0]:
                size = max(n, 2 * (self._table.shape[0] - 1), 1024)
                size = min(size, max(n, oracle_cap()))
                t = kernels.iota_table(size)
                t.setflags(write=False)
                self._table = t
            return self._table


_oracle = _OracleTable()


def _check_cap(n: int) -> int:
    n = _check_positive(n)
    cap = oracle_cap()
    if n > cap:
        raise CapacityError(f"{n} exceeds the oracle cap {cap} (set {ORACLE_CAP_ENV} to raise it)")
    return n


def iota_oracle(n: int) -> int:
    """Minimal count of positive squares summing to n, by exhaustive DP."""
    n = _check_cap(n)
    return int(_oracle.get(n)[n])


def iota_oracle_table(n_max: int) -> np.ndarray:
    """The whole DP table on [0, n_max]; entry 0 is 0."""
    n_max = _check_cap(n_max)
    return _oracle.get(n_max)[: n_max + 1]


def iota_range(n_max: int) -> np.ndarray:
    """Fast classification of every n in [0, n_max] at once (entry 0 is 0)."""
    n_max = _check_positive(n_max)
    return kernels.iota_batch(n_max)


def decompose(n: int) -> SquareDecomposition:
    """A shortest decomposition into positive squares, backtracked from the DP table."""
    n = _check_cap(n)
    table = _oracle.get(n)
    parts = []
    rest = n
    while rest:
        want = table[rest] - 1
        k = math.isqrt(rest)
        while table[rest - k * k] != want:
            k -= 1
        parts.append(k)
        rest -= k * k
    return SquareDecomposition(n, tuple(parts))
