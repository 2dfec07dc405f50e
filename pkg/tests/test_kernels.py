import os
import subprocess
import sys

import numpy as np
import pytest

from shiftfrob import kernels
from shiftfrob.kernels import jit, vectorized

from conftest import brute_frobenius, brute_iota, brute_members

BACKENDS = [pytest.param(jit, id="jit"), pytest.param(vectorized, id="numpy")]


@pytest.mark.parametrize("impl", BACKENDS)
def test_iota_table_matches_enumeration(impl):
    t = impl.iota_table(300)
    assert t[0] == 0
    assert [int(x) for x in t[1:]] == [brute_iota(n) for n in range(1, 301)]


@pytest.mark.parametrize("impl", BACKENDS)
def test_iota_batch_matches_enumeration(impl):
    t = impl.iota_batch(300)
    assert [int(x) for x in t[1:]] == [brute_iota(n) for n in range(1, 301)]


def test_backends_agree_on_iota():
    n = 50_000
    ref = jit.iota_table(n)
    assert np.array_equal(ref, vectorized.iota_table(n))
    assert np.array_equal(ref[1:], jit.iota_batch(n)[1:])
    assert np.array_equal(ref[1:], vectorized.iota_batch(n)[1:])


@pytest.mark.parametrize("impl", BACKENDS)
@pytest.mark.parametrize(
    "gens",
    [[3, 5], [2, 3], [8, 9, 12, 17], [6, 10, 15], [12, 13, 16, 21, 28, 37, 48], [7, 30, 45, 11]],
)
def test_apery_residues_match_closure(impl, gens):
    arr = np.asarray(sorted(gens), dtype=np.int64)
    for m in gens:
        ap = impl.apery_residues(arr, m)
        members = brute_members(gens, 10 * max(gens) ** 2)
        for r in range(m):
            assert ap[r] == min(x for x in members if x % m == r)


@pytest.mark.parametrize("impl", BACKENDS)
def test_apery_residues_empty_classes(impl):
    ap = impl.apery_residues(np.array([4, 6], dtype=np.int64), 4)
    assert list(ap) == [0, kernels.UNREACHED, 6, kernels.UNREACHED]


@pytest.mark.parametrize("impl", BACKENDS)
def test_reachable_matches_closure(impl):
    gens = [5, 7, 11]
    r = impl.reachable(np.array(gens, dtype=np.int64), 60)
    members = brute_members(gens, 60)
    assert set(np.flatnonzero(r)) == members
    gaps = np.flatnonzero(~impl.reachable(np.array(gens, dtype=np.int64), 200))
    assert gaps[-1] == brute_frobenius(gens)


@pytest.mark.parametrize("impl", BACKENDS)
def test_minimal_mask(impl):
    gens = np.array([8, 9, 12, 17, 24, 33], dtype=np.int64)
    ap = impl.apery_residues(gens, 8)
    assert list(gens[impl.minimal_mask(gens, ap)]) == [8, 9, 12]


def test_backend_flag_selects_numpy():
    env = dict(os.environ, SHIFTFROB_DISABLE_NUMBA="1")
    code = (
        "import shiftfrob, shiftfrob.kernels as k;"
        "print(shiftfrob.BACKEND, k.iota_table.__module__, shiftfrob.frobenius_bruteforce("
        "shiftfrob.shifted_square_generators(116)).value)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "shiftfrob.kernels.vectorized", "460"]
