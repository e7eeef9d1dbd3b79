"""Fast transforms on the subset lattice.

Implements the fast zeta transform ``f̂(X) = Σ_{S ⊆ X} f(S)`` and its
inverse (Möbius inversion), the ranked variants that additionally track
subset cardinality, and the Walsh–Hadamard transform underlying XOR
convolution.

All transforms run as n in-place passes over a working copy, one pass
per ground-set element in ascending element order.  The pass order is
fixed so operation-counter traces and results are reproducible; the
zeta and Möbius transforms perform exactly ``n * 2**(n-1)`` ring
additions/subtractions each.

Dispatch: plain i64 tables run on the selected kernel backend
(compiled when available), plain big-integer tables run on the object
kernels, and every other ring (rationals, counting wrappers) runs the
instrumented generic loops.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .core import GroundSet, SetFunction, popcounts
from .rings import BigIntRing, CheckedWordRing, Ring


def _zeta_generic(vals: list, n: int, ring: Ring) -> None:
    add = ring.add
    size = 1 << n
    for j in range(n):
        bit = 1 << j
        for x in range(size):
            if x & bit:
                vals[x] = add(vals[x ^ bit], vals[x])


def _mobius_generic(vals: list, n: int, ring: Ring) -> None:
    sub = ring.sub
    size = 1 << n
    for j in range(n):
        bit = 1 << j
        for x in range(size):
            if x & bit:
                vals[x] = sub(vals[x], vals[x ^ bit])


def _wht_generic(vals: list, n: int, ring: Ring) -> None:
    add = ring.add
    sub = ring.sub
    size = 1 << n
    for j in range(n):
        bit = 1 << j
        for x in range(size):
            if not x & bit:
                a = vals[x]
                b = vals[x | bit]
                vals[x] = add(a, b)
                vals[x | bit] = sub(a, b)


def zeta_slice(vals: list, n: int, ring: Ring) -> list:
    """In-place zeta pass over a raw value list, ring-dispatched."""
    if isinstance(ring, CheckedWordRing):
        arr = np.array(vals, dtype=np.int64)
        _backend.active.zeta_i64(arr, n)
        vals[:] = arr.tolist()
    elif isinstance(ring, BigIntRing):
        _backend.active.zeta_obj(vals, n)
    else:
        _zeta_generic(vals, n, ring)
    return vals


def mobius_slice(vals: list, n: int, ring: Ring) -> list:
    if isinstance(ring, CheckedWordRing):
        arr = np.array(vals, dtype=np.int64)
        _backend.active.mobius_i64(arr, n)
        vals[:] = arr.tolist()
    elif isinstance(ring, BigIntRing):
        _backend.active.mobius_obj(vals, n)
    else:
        _mobius_generic(vals, n, ring)
    return vals


def zeta_transform(f: SetFunction) -> SetFunction:
    """Sum over subsets: output at X is ``Σ_{S ⊆ X} f(S)``."""
    vals = list(f.values)
    zeta_slice(vals, f.ground.n, f.ring)
    return SetFunction._trusted(f.ground, f.ring, vals)


def mobius_inversion(g: SetFunction) -> SetFunction:
    """Exact inverse of :func:`zeta_transform`.

    Output at S is ``Σ_{X ⊆ S} (-1)**|S∖X| g(X)``.
    """
    vals = list(g.values)
    mobius_slice(vals, g.ground.n, g.ring)
    return SetFunction._trusted(g.ground, g.ring, vals)


@dataclass
class RankedTable:
    """(r_max+1) x 2**n table of ring values, slice k at mask X = f̂(k, X)."""

    ground: GroundSet
    ring: Ring
    r_max: int
    slices: list

    def __post_init__(self):
        if not 0 <= self.r_max <= 2 * self.ground.n:
            raise ValueError(
                f"rank bound {self.r_max} outside 0..{2 * self.ground.n}"
            )
        if len(self.slices) != self.r_max + 1:
            raise ValueError(
                f"expected {self.r_max + 1} slices, got {len(self.slices)}"
            )
        size = self.ground.size
        for k, s in enumerate(self.slices):
            if len(s) != size:
                raise ValueError(f"slice {k} has length {len(s)}, expected {size}")

    def get(self, k: int, mask: int):
        return self.slices[k][mask]


def ranked_zeta(f: SetFunction, r_max: int) -> RankedTable:
    """Rank-split zeta transform: slice k at X sums f over rank-k subsets of X.

    Slice k is the zeta transform of f restricted to cardinality-k
    subsets; slices with k > n are identically zero.  ``r_max`` may go
    up to 2n so downstream rank convolutions can read ranks above n.
    """
    n = f.ground.n
    ring = f.ring
    if not 0 <= r_max <= 2 * n:
        raise ValueError(f"rank bound {r_max} outside 0..{2 * n}")
    pc = popcounts(n)
    zero = ring.zero
    slices = []
    for k in range(r_max + 1):
        vals = [f.values[m] if pc[m] == k else zero for m in range(f.ground.size)]
        if k <= n:
            zeta_slice(vals, n, ring)
        slices.append(vals)
    return RankedTable(f.ground, ring, r_max, slices)


def ranked_mobius(table: RankedTable) -> RankedTable:
    """Möbius-invert every slice independently.

    For a table built by :func:`ranked_zeta` from f, reading slice |S|
    at mask S afterwards recovers f(S).
    """
    n = table.ground.n
    slices = [mobius_slice(list(s), n, table.ring) for s in table.slices]
    return RankedTable(table.ground, table.ring, table.r_max, slices)


def ranked_read(table: RankedTable, extra_rank: int = 0) -> SetFunction:
    """Read entry (|S| + extra_rank, S) for every mask S."""
    pc = popcounts(table.ground.n)
    vals = [table.slices[pc[m] + extra_rank][m] for m in range(table.ground.size)]
    return SetFunction._trusted(table.ground, table.ring, vals)


def walsh_hadamard(f: SetFunction, inverse: bool = False) -> SetFunction:
    """Character-sum transform: output(X) = ``Σ_S (-1)**|X∩S| f(S)``.

    The inverse applies the same butterflies and then divides by 2**n
    exactly; over integer rings an inexact division raises, which
    signals corrupted input rather than silently rounding.
    """
    n = f.ground.n
    ring = f.ring
    if isinstance(ring, CheckedWordRing):
        arr = np.array(f.values, dtype=np.int64)
        if inverse:
            _backend.active.wht_inverse_i64(arr, n)
        else:
            _backend.active.wht_i64(arr, n)
        vals = arr.tolist()
    else:
        vals = list(f.values)
        _wht_generic(vals, n, ring)
        if inverse:
            vals = [ring.divexact_pow2(v, n) for v in vals]
    return SetFunction._trusted(f.ground, ring, vals)
