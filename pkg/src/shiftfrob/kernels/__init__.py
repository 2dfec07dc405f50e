"""Hot numeric kernels, dispatched to numba or numpy.

Both variants share one contract per kernel:

``iota_table(n_max)``
    int8 array ``t`` with ``t[n]`` the least number of positive squares
    summing to ``n`` (``t[0] = 0``), computed by exhaustive search.
``iota_batch(n_max)``
    int8 array of the same shape computed by arithmetic classification.
``apery_residues(gens, m)``
    int64 array of the least element of ``<gens>`` in each class mod ``m``;
    ``UNREACHED`` where a class is empty.
``reachable(gens, limit)``
    bool array marking the elements of ``<gens>`` in ``[0, limit]``.
``minimal_mask(gens, apery)``
    bool mask over sorted ``gens`` (``gens[0]`` the modulus of ``apery``)
    keeping the generators not expressible through smaller ones.
"""
from .._accel import BACKEND, HAS_NUMBA
from . import vectorized
from .common import UNREACHED

if HAS_NUMBA:
    from . import jit as _impl
else:
    _impl = vectorized

iota_table = _impl.iota_table
iota_batch = _impl.iota_batch
apery_residues = _impl.apery_residues
reachable = _impl.reachable
minimal_mask = _impl.minimal_mask

__all__ = [
    "BACKEND",
    "UNREACHED",
    "apery_residues",
    "iota_batch",
    "iota_table",
    "minimal_mask",
    "reachable",
]


def warmup() -> None:
    """Trigger compilation on tiny inputs (before forking workers)."""
    import numpy as np

    g = np.array([3, 5], dtype=np.int64)
    iota_table(8)
    iota_batch(8)
    ap = apery_residues(g, 3)
    reachable(g, 10)
    minimal_mask(g, ap)
