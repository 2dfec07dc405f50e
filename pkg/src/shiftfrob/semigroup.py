"""Numerical semigroups given by generators, with brute-force Frobenius numbers.

Nothing here knows about the shifted-square formulas; it is the ground
truth those formulas are checked against.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable

import numpy as np

from . import kernels
from .errors import CapacityError, DomainError
from .result import FrobeniusResult, Method

MAX_A_ENV = "SHIFTFROB_MAX_A"
DEFAULT_MAX_A = 1 << 20


@dataclass(frozen=True)
class AperySet:
    """Least element of S in every residue class mod ``modulus``."""

    modulus: int
    elements: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.elements.setflags(write=False)

    def contains(self, n: int) -> bool:
        return n >= 0 and n >= int(self.elements[n % self.modulus])

    @property
    def frobenius(self) -> int:
        return int(self.elements.max()) - self.modulus


@dataclass(frozen=True, init=False)
class GeneratorSet:
    """Minimal generators of a numerical semigroup, strictly increasing.

    Any positive integers with gcd 1 are accepted; duplicates and
    generators expressible through the others are dropped.
    """

    generators: tuple[int, ...]

    def __init__(self, generators: Iterable[int]):
        gens = sorted({int(g) for g in generators})
        if not gens:
            raise DomainError("empty generator set")
        if gens[0] < 1:
            raise DomainError(f"generators must be positive, got {gens[0]}")
        if reduce(math.gcd, gens) != 1:
            raise DomainError(f"gcd of generators is {reduce(math.gcd, gens)}, not 1")
        arr = np.asarray(gens, dtype=np.int64)
        ap = kernels.apery_residues(arr, gens[0])
        keep = kernels.minimal_mask(arr, ap)
        object.__setattr__(self, "generators", tuple(int(g) for g in arr[keep]))
        # same semigroup, so the Apery set of the full list is reusable
        object.__setattr__(self, "_apery", AperySet(gens[0], ap))

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.generators, dtype=np.int64)


def max_a() -> int:
    raw = os.environ.get(MAX_A_ENV)
    return int(raw) if raw else DEFAULT_MAX_A


def truncation(a: int) -> int:
    """Smallest M with a + M^2 >= a^2, i.e. M = ceil(sqrt(a^2 - a)).

    Past a^2 - a - 1 everything already lies in <a, a+1>, so squares beyond
    M cannot shrink the semigroup's complement.
    """
    t = a * a - a
    if t == 0:
        return 0
    s = math.isqrt(t)
    return s if s * s == t else s + 1


def shifted_square_candidates(a: int) -> list[int]:
    return [a + i * i for i in range(truncation(a) + 1)]


def shifted_square_generators(a: int) -> GeneratorSet:
    a = int(a)
    if a < 1:
        raise DomainError(f"shift must be positive, got {a}")
    if a > max_a():
        raise CapacityError(f"shift {a} exceeds the cap {max_a()} (set {MAX_A_ENV} to raise it)")
    return GeneratorSet(shifted_square_candidates(a))


def apery_set(S: GeneratorSet, m: int) -> AperySet:
    m = int(m)
    if m == S.multiplicity:
        return S._apery
    if m < 1 or not contains(S, m):
        raise DomainError(f"{m} is not a positive element of the semigroup")
    gens = np.asarray(sorted(set(S.generators) | {m}), dtype=np.int64)
    return AperySet(m, kernels.apery_residues(gens, m))


def contains(S: GeneratorSet, n: int) -> bool:
    return S._apery.contains(int(n))


def frobenius_bruteforce(S: GeneratorSet) -> FrobeniusResult:
    """Largest gap via the Apery set of the multiplicity; -1 when S is all of N."""
    if S.multiplicity == 1:
        return FrobeniusResult(-1, Method.ORACLE, apery=S._apery)
    return FrobeniusResult(S._apery.frobenius, Method.ORACLE, apery=S._apery)


def frobenius_sieve(S: GeneratorSet) -> int:
    """Frobenius number from a dense membership sieve, without Apery sets.

    Grows the sieve until it contains a run of ``multiplicity`` consecutive
    members; everything after such a run is a member too.
    """
    m = S.multiplicity
    if m == 1:
        return -1
    gens = S.as_array()
    limit = 4 * S.generators[-1] + m
    while True:
        member = kernels.reachable(gens, limit)
        holes = np.flatnonzero(~member)
        if holes.size and limit - holes[-1] >= m:
            return int(holes[-1])
        limit *= 2


def gaps(S: GeneratorSet) -> list[int]:
    """Every non-member of S in increasing order."""
    m = S.multiplicity
    out = []
    for w in S._apery.elements:
        out.extend(range(int(w) - m, -1, -m))
    out.sort()
    return out
