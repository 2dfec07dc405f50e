"""Loop kernels compiled with numba (plain Python loops when numba is off)."""
import math

import numpy as np

from .._accel import njit
from .common import UNREACHED


@njit(cache=True)
def _isqrt(n):
    s = np.int64(math.sqrt(n))
    while s * s > n:
        s -= 1
    while (s + 1) * (s + 1) <= n:
        s += 1
    return s


@njit(cache=True)
def iota_table(n_max):
    t = np.empty(n_max + 1, dtype=np.int8)
    t[0] = 0
    for n in range(1, n_max + 1):
        s = _isqrt(n)
        square = s * s == n
        best = 127
        k = 1
        while k * k <= n:
            v = t[n - k * k] + 1
            if v < best:
                best = v
            # 1 needs n square, and k*k == n is the last k anyway
            if best == 2 and not square:
                break
            k += 1
        t[n] = best
    return t


@njit(cache=True)
def _type_of(n):
    s = _isqrt(n)
    if s * s == n:
        return 1
    m = n
    while m % 2 == 0:
        m //= 2
    two = True
    p = 3
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            if p % 4 == 3 and e % 2 == 1:
                two = False
                break
        p += 2
    if two and m > 1 and m % 4 == 3:
        two = False
    if two:
        return 2
    m = n
    while m % 4 == 0:
        m //= 4
    if m % 8 == 7:
        return 3
    return 4


@njit(cache=True)
def iota_batch(n_max):
    to_iota = np.array([0, 1, 2, 4, 3], dtype=np.int8)
    t = np.zeros(n_max + 1, dtype=np.int8)
    for n in range(1, n_max + 1):
        t[n] = to_iota[_type_of(n)]
    return t


@njit(cache=True)
def apery_residues(gens, m):
    # round-robin shortest paths over residues mod m, one generator at a time
    n = np.full(m, UNREACHED, dtype=np.int64)
    n[0] = 0
    for g in gens:
        if g == m:
            continue
        d = math.gcd(m, g % m) if g % m else m
        for r in range(d):
            best = UNREACHED
            q = r
            while q < m:
                if n[q] < best:
                    best = n[q]
                q += d
            if best == UNREACHED:
                continue
            for _ in range(m // d):
                best += g
                p = best % m
                if n[p] < best:
                    best = n[p]
                n[p] = best
    return n


@njit(cache=True)
def reachable(gens, limit):
    r = np.zeros(limit + 1, dtype=np.bool_)
    r[0] = True
    for x in range(1, limit + 1):
        for g in gens:
            if g <= x and r[x - g]:
                r[x] = True
                break
    return r


@njit(cache=True)
def minimal_mask(gens, apery):
    m = apery.shape[0]
    keep = np.ones(gens.shape[0], dtype=np.bool_)
    for i in range(gens.shape[0]):
        g = gens[i]
        for j in range(i):
            x = g - gens[j]
            if x >= apery[x % m]:
                keep[i] = False
                break
    return keep
