"""Pure-numpy kernels; same contracts as the numba ones, different algorithms where loops would crawl."""
import math

import numpy as np

from .common import TYPE_TO_IOTA, UNREACHED


def iota_table(n_max):
    # breadth-first over "sum of exactly s positive squares" layers
    n_max = int(n_max)
    t = np.zeros(n_max + 1, dtype=np.int8)
    squares = np.arange(1, math.isqrt(n_max) + 1, dtype=np.int64) ** 2
    exact = np.zeros(n_max + 1, dtype=np.bool_)
    exact[squares] = True
    reached = exact.copy()
    reached[0] = True
    t[squares] = 1
    s = 1
    while not reached.all():
        s += 1
        nxt = np.zeros_like(exact)
        for q in squares:
            nxt[q:] |= exact[: n_max + 1 - q]
        fresh = nxt & ~reached
        t[fresh] = s
        reached |= fresh
        exact = nxt
    return t


def _odd_primes_3_mod_4(limit):
    sieve = np.ones(limit + 1, dtype=np.bool_)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    p = np.flatnonzero(sieve)
    return p[p % 4 == 3]


def iota_batch(n_max):
    n_max = int(n_max)
    n = np.arange(n_max + 1, dtype=np.int64)
    types = np.full(n_max + 1, 4, dtype=np.int8)

    # Legendre form: strip factors of 4, look for 7 mod 8
    core = n.copy()
    core[0] = 1
    mask = core % 4 == 0
    while mask.any():
        core[mask] //= 4
        mask = core % 4 == 0
    types[core % 8 == 7] = 3

    # a prime 3 mod 4 with odd exponent rules out two squares
    odd = np.zeros(n_max + 1, dtype=np.bool_)
    for p in _odd_primes_3_mod_4(n_max):
        parity = np.zeros(n_max // p + 1, dtype=np.int8)
        pk = p
        while pk <= n_max:
            parity[:: pk // p] ^= 1
            pk *= p
        odd[::p] |= parity.astype(np.bool_)
    types[~odd] = 2

    types[np.arange(1, math.isqrt(n_max) + 1) ** 2] = 1
    types[0] = 0
    return TYPE_TO_IOTA[types]


def apery_residues(gens, m):
    # Bellman-Ford sweeps to a fixpoint
    m = int(m)
    n = np.full(m, UNREACHED, dtype=np.int64)
    n[0] = 0
    idx = np.arange(m)
    others = [int(g) for g in gens if int(g) != m]
    changed = True
    while changed:
        changed = False
        for g in others:
            src = n[(idx - g) % m]
            cand = np.where(src < UNREACHED, src + g, UNREACHED)
            better = cand < n
            if better.any():
                n[better] = cand[better]
                changed = True
    return n


def reachable(gens, limit):
    limit = int(limit)
    r = np.zeros(limit + 1, dtype=np.bool_)
    r[0] = True
    for g in gens:
        g = int(g)
        for start in range(g, limit + 1, g):
            stop = min(start + g, limit + 1)
            r[start:stop] |= r[start - g : stop - g]
    return r


def minimal_mask(gens, apery):
    gens = np.asarray(gens, dtype=np.int64)
    m = apery.shape[0]
    keep = np.ones(gens.shape[0], dtype=np.bool_)
    for i in range(1, gens.shape[0]):
        x = gens[i] - gens[:i]
        keep[i] = not (x >= apery[x % m]).any()
    return keep
