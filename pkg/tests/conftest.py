import itertools
import math

import pytest


def brute_iota(n):
    """Least s with n a sum of s positive squares, by enumerating tuples."""
    roots = range(1, math.isqrt(n) + 1)
    for s in range(1, 5):
        for combo in itertools.combinations_with_replacement(roots, s):
            if sum(k * k for k in combo) == n:
                return s
    raise AssertionError(f"no decomposition of {n} into four squares")


def brute_members(gens, limit):
    """Set of nonnegative combinations of gens up to limit, by closure."""
    members = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x + g
            if y <= limit and y not in members:
                members.add(y)
                frontier.append(y)
    return members


def brute_frobenius(gens):
    if 1 in gens:
        return -1
    limit = max(gens) ** 2
    members = brute_members(gens, limit)
    return max(n for n in range(limit + 1) if n not in members)


@pytest.fixture
def oracles():
    class O:
        iota = staticmethod(brute_iota)
        members = staticmethod(brute_members)
        frobenius = staticmethod(brute_frobenius)

    return O


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
