"""Ring-valued products on set functions.

The family, with (U, V) ranging over pairs of subsets of S:

* subset convolution   -- U ∪ V = S and U ∩ V = ∅ (exact disjoint splits);
* covering product     -- U ∪ V = S (overlap allowed);
* packing product      -- U ∩ V = ∅ (union may be a proper subset of S);
* intersecting cover   -- U ∪ V = S and U ∩ V ≠ ∅;
* exact intersection   -- U ∪ V = S and |U ∩ V| = ℓ;
* XOR convolution      -- sum over T ⊆ N of f(T)·g(S Δ T).

Subset convolution runs as ranked zeta transforms of both inputs, a
convolution over the rank coordinate, ranked Möbius inversion, and a
read-out at (|S|, S); the read-out at (|S| + ℓ, S) instead yields the
exact-intersection product, because U ∪ V = S with |U| + |V| = |S| + ℓ
forces |U ∩ V| = ℓ.  The covering product is the cheaper
zeta/pointwise/Möbius pipeline, packing reuses subset convolution via
f ↑ g = f ∗ g ∗ 1, and XOR convolution diagonalizes under the
Walsh–Hadamard transform.

Total ring-operation counts: subset convolution stays below
4·(n+1)²·2**n (the generic pipeline performs
3·(n+1)·n·2**(n-1) + (n+1)(n+2)/2·2**n + n(n+1)/2·2**n operations) and
the covering product below 4·(n+1)·2**n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .core import SetFunction, all_ones, popcounts
from .rings import BigIntRing, CheckedWordRing, Ring
from .transform import (
    RankedTable,
    mobius_inversion,
    mobius_slice,
    ranked_mobius,
    ranked_zeta,
    walsh_hadamard,
    zeta_slice,
    zeta_transform,
)


@dataclass(frozen=True)
class ProductMode:
    """Closed enumeration of the product family; ``exact`` carries ℓ."""

    kind: str
    ell: int | None = None

    def __str__(self) -> str:
        if self.kind == "exact":
            return f"exact:{self.ell}"
        return self.kind


SUBSET = ProductMode("subset")
COVER = ProductMode("cover")
PACK = ProductMode("pack")
INTERSECT_COVER = ProductMode("icover")
XOR = ProductMode("xor")


def exact_intersection(ell: int) -> ProductMode:
    if not isinstance(ell, int) or ell < 0:
        raise ValueError(f"intersection cardinality must be a nonnegative integer, got {ell!r}")
    return ProductMode("exact", ell)


def _check_pair(f: SetFunction, g: SetFunction) -> None:
    if f.ground != g.ground:
        raise ValueError(
            f"ground-set mismatch: {f.ground.n} vs {g.ground.n} elements"
        )
    if f.ring is not g.ring:
        raise ValueError(f"ring mismatch: {f.ring.name} vs {g.ring.name}")


def _pointwise_mul(f: SetFunction, g: SetFunction) -> SetFunction:
    ring = f.ring
    if isinstance(ring, CheckedWordRing):
        out = _backend.active.mul_i64(
            np.array(f.values, dtype=np.int64), np.array(g.values, dtype=np.int64)
        )
        vals = out.tolist()
    elif isinstance(ring, BigIntRing):
        vals = _backend.active.mul_obj(f.values, g.values)
    else:
        mul = ring.mul
        vals = [mul(a, b) for a, b in zip(f.values, g.values)]
    return SetFunction._trusted(f.ground, ring, vals)


def _pointwise_sub(f: SetFunction, g: SetFunction) -> SetFunction:
    ring = f.ring
    if isinstance(ring, CheckedWordRing):
        out = _backend.active.sub_i64(
            np.array(f.values, dtype=np.int64), np.array(g.values, dtype=np.int64)
        )
        vals = out.tolist()
    elif isinstance(ring, BigIntRing):
        vals = _backend.active.sub_obj(f.values, g.values)
    else:
        sub = ring.sub
        vals = [sub(a, b) for a, b in zip(f.values, g.values)]
    return SetFunction._trusted(f.ground, ring, vals)


def ranked_convolve_values(
    fv: list, gv: list, n: int, ring: Ring, extra_rank: int = 0
) -> list:
    """Ranked pipeline on raw value lists, read out at (|S| + extra_rank, S).

    Shared by subset convolution (extra_rank = 0), the exact-intersection
    product, and the big-integer embedding of the min/max-sum semiring.
    """
    size = 1 << n
    pc = popcounts(n)
    zero = ring.zero
    r_out = n + extra_rank

    a = []
    b = []
    for k in range(n + 1):
        fa = [fv[m] if pc[m] == k else zero for m in range(size)]
        ga = [gv[m] if pc[m] == k else zero for m in range(size)]
        zeta_slice(fa, n, ring)
        zeta_slice(ga, n, ring)
        a.append(fa)
        b.append(ga)

    obj_path = isinstance(ring, BigIntRing)
    add = ring.add
    mul = ring.mul
    out = [zero] * size
    for k in range(r_out + 1):
        acc = None
        for j in range(max(0, k - n), min(k, n) + 1):
            aj = a[j]
            bj = b[k - j]
            if acc is None:
                if obj_path:
                    acc = _backend.active.mul_obj(aj, bj)
                else:
                    acc = [mul(aj[m], bj[m]) for m in range(size)]
            elif obj_path:
                _backend.active.mul_add_obj(acc, aj, bj)
            else:
                for m in range(size):
                    acc[m] = add(acc[m], mul(aj[m], bj[m]))
        if acc is None:
            acc = [zero] * size
        mobius_slice(acc, n, ring)
        for m in range(size):
            if pc[m] + extra_rank == k:
                out[m] = acc[m]
    return out


def subset_convolve(f: SetFunction, g: SetFunction) -> SetFunction:
    """(f ∗ g)(S) = ``Σ_{T ⊆ S} f(T)·g(S∖T)`` in O(n² 2**n) ring operations."""
    _check_pair(f, g)
    n = f.ground.n
    ring = f.ring
    if isinstance(ring, CheckedWordRing):
        out = _backend.active.subset_convolve_i64(
            np.array(f.values, dtype=np.int64),
            np.array(g.values, dtype=np.int64),
            n,
        )
        return SetFunction._trusted(f.ground, ring, out.tolist())
    vals = ranked_convolve_values(f.values, g.values, n, ring)
    return SetFunction._trusted(f.ground, ring, vals)


def rank_convolve(a: RankedTable, b: RankedTable, r_max: int) -> RankedTable:
    """Convolution over the rank coordinate: slice k = ``Σ_j a(j,·)·b(k-j,·)``."""
    if a.ground != b.ground:
        raise ValueError("ground-set mismatch between ranked tables")
    if a.ring is not b.ring:
        raise ValueError(f"ring mismatch: {a.ring.name} vs {b.ring.name}")
    if r_max > a.r_max + b.r_max:
        raise ValueError(
            f"rank bound {r_max} exceeds reachable rank {a.r_max + b.r_max}"
        )
    if r_max < 0:
        raise ValueError("rank bound must be nonnegative")
    ring = a.ring
    size = a.ground.size
    zero = ring.zero
    add = ring.add
    mul = ring.mul
    obj_path = isinstance(ring, BigIntRing)
    slices = []
    for k in range(r_max + 1):
        acc = None
        for j in range(max(0, k - b.r_max), min(k, a.r_max) + 1):
            aj = a.slices[j]
            bj = b.slices[k - j]
            if acc is None:
                if obj_path:
                    acc = _backend.active.mul_obj(aj, bj)
                else:
                    acc = [mul(aj[m], bj[m]) for m in range(size)]
            elif obj_path:
                _backend.active.mul_add_obj(acc, aj, bj)
            else:
                for m in range(size):
                    acc[m] = add(acc[m], mul(aj[m], bj[m]))
        if acc is None:
            acc = [zero] * size
        slices.append(acc)
    return RankedTable(a.ground, ring, r_max, slices)


def cover_product(f: SetFunction, g: SetFunction) -> SetFunction:
    """(f ⊛ g)(S) = sum over U ∪ V = S, in O(n 2**n) ring operations."""
    _check_pair(f, g)
    return mobius_inversion(_pointwise_mul(zeta_transform(f), zeta_transform(g)))


def packing_product(f: SetFunction, g: SetFunction) -> SetFunction:
    """(f ↑ g)(S) = sum over disjoint U, V ⊆ S; computed as f ∗ g ∗ 1."""
    _check_pair(f, g)
    ones = all_ones(f.ground, f.ring)
    return subset_convolve(subset_convolve(f, g), ones)


def intersect_cover_product(f: SetFunction, g: SetFunction) -> SetFunction:
    """(f ⊚ g)(S) = covering pairs with U ∩ V ≠ ∅; equals (f ⊛ g) - (f ∗ g)."""
    _check_pair(f, g)
    return _pointwise_sub(cover_product(f, g), subset_convolve(f, g))


def exact_intersection_product(f: SetFunction, g: SetFunction, ell: int) -> SetFunction:
    """Covering pairs with |U ∩ V| = ℓ exactly.

    Rank convolution read out at (|S| + ℓ, S): a pair with U ∪ V = S and
    |U| + |V| = |S| + ℓ has |U ∩ V| = ℓ.
    """
    _check_pair(f, g)
    n = f.ground.n
    if not isinstance(ell, int) or not 0 <= ell <= n:
        raise ValueError(f"intersection cardinality {ell!r} outside 0..{n}")
    vals = ranked_convolve_values(f.values, g.values, n, f.ring, extra_rank=ell)
    return SetFunction._trusted(f.ground, f.ring, vals)


def xor_convolve(f: SetFunction, g: SetFunction) -> SetFunction:
    """(f Δ g)(S) = ``Σ_{T ⊆ N} f(T)·g(S Δ T)`` via Walsh–Hadamard transforms."""
    _check_pair(f, g)
    if not f.ring.integral:
        raise ValueError("XOR convolution requires an integer-valued ring")
    wf = walsh_hadamard(f)
    wg = walsh_hadamard(g)
    return walsh_hadamard(_pointwise_mul(wf, wg), inverse=True)


_POWER_MODES = ("subset", "pack")


def convolve_power(f: SetFunction, k: int, mode: ProductMode = SUBSET) -> SetFunction:
    """k-fold product of f with itself under subset or packing convolution.

    Binary powering: O(log k) product evaluations.  Both products are
    associative (packing because f ↑ g = f ∗ g ∗ 1), so the square-and-
    multiply order is immaterial.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"power must be a positive integer, got {k!r}")
    if mode.kind not in _POWER_MODES:
        raise ValueError(f"convolve_power supports subset/pack, got {mode}")
    product = subset_convolve if mode.kind == "subset" else packing_product
    result = None
    base = f
    while True:
        if k & 1:
            result = base if result is None else product(result, base)
        k >>= 1
        if k == 0:
            return result
        base = product(base, base)
