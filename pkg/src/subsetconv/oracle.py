"""Brute-force reference implementations of every product.

These evaluate the defining sums literally (O(3**n) pair visits per
table for the subset/packing products, O(4**n) for the covering family
and XOR) and deliberately share no code with the fast pipelines beyond
:func:`iterate_subsets`, so agreement between the two is evidence, not
tautology.  A hard n <= 14 guard keeps accidental use at desk scale;
benchmarks may lift it explicitly via ``max_n``.
"""

from __future__ import annotations

from .core import SetFunction, iterate_subsets
from .errors import GuardError
from .optimize import (
    ExtendedWeightFunction,
    INF,
    NEG_INF,
    OptMode,
    is_finite,
)
from .products import ProductMode

ORACLE_MAX_N = 14


def _guard(n: int, max_n: int) -> None:
    if n > max_n:
        raise GuardError(f"oracle guard: n={n} exceeds the cap of {max_n}")


def direct_product(
    f: SetFunction, g: SetFunction, mode: ProductMode, max_n: int = ORACLE_MAX_N
) -> SetFunction:
    """Literal evaluation of the defining double sum for ``mode``."""
    if f.ground != g.ground:
        raise ValueError("ground-set mismatch")
    if f.ring is not g.ring:
        raise ValueError("ring mismatch")
    n = f.ground.n
    _guard(n, max_n)
    ring = f.ring
    add = ring.add
    mul = ring.mul
    zero = ring.zero
    fv = f.values
    gv = g.values
    size = f.ground.size
    kind = mode.kind
    out = []

    if kind == "subset":
        # Inlined submask walk (same order as iterate_subsets); this branch
        # is the benchmark reference at lifted n, where generator overhead
        # would dominate the measurement.
        for s in range(size):
            acc = zero
            t = s
            while True:
                acc = add(acc, mul(fv[t], gv[s ^ t]))
                if t == 0:
                    break
                t = (t - 1) & s
            out.append(acc)
    elif kind == "pack":
        for s in range(size):
            acc = zero
            for u in iterate_subsets(s):
                rest = s ^ u
                for v in iterate_subsets(rest):
                    acc = add(acc, mul(fv[u], gv[v]))
            out.append(acc)
    elif kind in ("cover", "icover", "exact"):
        ell = mode.ell
        for s in range(size):
            acc = zero
            for u in iterate_subsets(s):
                base = s ^ u
                for w in iterate_subsets(u):
                    inter = u ^ w
                    if kind == "icover" and inter == 0:
                        continue
                    if kind == "exact" and inter.bit_count() != ell:
                        continue
                    acc = add(acc, mul(fv[u], gv[base | inter]))
            out.append(acc)
    elif kind == "xor":
        for s in range(size):
            acc = zero
            for t in range(size):
                acc = add(acc, mul(fv[t], gv[s ^ t]))
            out.append(acc)
    else:
        raise ValueError(f"unknown product mode {mode}")
    return SetFunction._trusted(f.ground, ring, out)


def direct_opt_product(
    f: ExtendedWeightFunction,
    g: ExtendedWeightFunction,
    mode: OptMode,
    product: ProductMode,
    max_n: int = ORACLE_MAX_N,
) -> ExtendedWeightFunction:
    """Literal min/max over the product's pair set with absorbing infinities."""
    if f.ground != g.ground:
        raise ValueError("ground-set mismatch")
    n = f.ground.n
    _guard(n, max_n)
    minimize = mode.kind == "min"
    absorb = INF if minimize else NEG_INF
    better = (lambda a, b: a < b) if minimize else (lambda a, b: a > b)
    fv = f.weights
    gv = g.weights
    size = f.ground.size
    kind = product.kind
    out = []
    for s in range(size):
        best = absorb
        if kind == "subset":
            pairs = ((t, s ^ t) for t in iterate_subsets(s))
        elif kind in ("cover", "icover", "exact"):
            def pairs_gen(s=s):
                for u in iterate_subsets(s):
                    base = s ^ u
                    for w in iterate_subsets(u):
                        inter = u ^ w
                        if kind == "icover" and inter == 0:
                            continue
                        if kind == "exact" and inter.bit_count() != product.ell:
                            continue
                        yield u, base | inter

            pairs = pairs_gen()
        else:
            raise ValueError(f"unsupported product mode {product} for semirings")
        for u, v in pairs:
            a = fv[u]
            b = gv[v]
            if is_finite(a) and is_finite(b):
                cand = a + b
                if best is absorb or better(cand, best):
                    best = cand
        out.append(best)
    return ExtendedWeightFunction(f.ground, out)
