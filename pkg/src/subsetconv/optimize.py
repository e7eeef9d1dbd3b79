"""Min-sum / max-sum semiring products via digit embedding.

The semirings lack additive inverses, so the fast ring pipelines do not
apply directly.  Instead each finite weight v is shifted to be
nonnegative and mapped to the big integer B**v, with B = 2**b a power
of two chosen so that digit coefficients never collide: after a ring
product, digit r of the packed integer at mask S counts exactly the
pairs whose weights sum to r.  The optimum is then the lowest (min) or
highest (max) populated digit, an O(1) bit scan because B is a power of
two.

The digit width b is the bit length of the worst-case pair count: 2**n
pairs for disjoint splits (b = n + 1), 3**n pairs for the covering
family (b = bit_length(3**n)) -- a covering digit can exceed 2**n, so
the wider base is required for the cover, intersecting-cover and
exact-intersection products.

Infinities are mapped to the ring zero, which is absorbing under
multiplication and adds nothing, so infeasibility stays exact: a packed
value of 0 means no finite pair exists.

Values are gmpy2 integers when gmpy2 is importable (plain Python ints
otherwise; results are identical, gmpy2 is faster).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _backend
from .core import GroundSet, SetFunction, iterate_subsets, popcounts
from .products import ProductMode, SUBSET, ranked_convolve_values
from .rings import BIGINT
from .transform import mobius_slice, zeta_slice

try:
    import gmpy2

    _ONE = gmpy2.mpz(1)

    def _lsb_index(x) -> int:
        return gmpy2.bit_scan1(x)

except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _ONE = 1

    def _lsb_index(x) -> int:
        return (x & -x).bit_length() - 1


class ExtendedInfinity:
    """Absorbing +inf / -inf endpoint of the extended integers."""

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self):
        return "inf" if self.sign > 0 else "-inf"

    def __neg__(self):
        return NEG_INF if self.sign > 0 else INF

    def __add__(self, other):
        if isinstance(other, ExtendedInfinity) and other.sign != self.sign:
            raise ValueError("inf + -inf is undefined")
        return self

    __radd__ = __add__

    def __lt__(self, other):
        if other is self:
            return False
        return self.sign < 0

    def __le__(self, other):
        return self is other or self.sign < 0

    def __gt__(self, other):
        if other is self:
            return False
        return self.sign > 0

    def __ge__(self, other):
        return self is other or self.sign > 0

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return hash(("ExtendedInfinity", self.sign))


INF = ExtendedInfinity(1)
NEG_INF = ExtendedInfinity(-1)


def is_finite(x) -> bool:
    return not isinstance(x, ExtendedInfinity)


@dataclass(frozen=True)
class OptMode:
    kind: str


MIN_SUM = OptMode("min")
MAX_SUM = OptMode("max")


class ExtendedWeightFunction:
    """Dense table of extended weights: finite integers in [-M, M] or ±inf."""

    __slots__ = ("ground", "weights", "bound")

    def __init__(self, ground: GroundSet, weights: Sequence, bound: int | None = None):
        if len(weights) != ground.size:
            raise ValueError(
                f"expected {ground.size} weights for a {ground.n}-element ground set, "
                f"got {len(weights)}"
            )
        vals = []
        finite_abs = 0
        for w in weights:
            if isinstance(w, ExtendedInfinity):
                vals.append(w)
            elif isinstance(w, int) and not isinstance(w, bool):
                vals.append(w)
                finite_abs = max(finite_abs, abs(w))
            else:
                raise TypeError(f"weights are integers or ±inf, got {w!r}")
        if bound is None:
            bound = finite_abs
        elif finite_abs > bound:
            raise ValueError(
                f"entry with magnitude {finite_abs} violates the declared bound {bound}"
            )
        self.ground = ground
        self.weights = vals
        self.bound = bound

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, mask: int):
        return self.weights[mask]

    def __iter__(self):
        return iter(self.weights)

    def __eq__(self, other):
        if not isinstance(other, ExtendedWeightFunction):
            return NotImplemented
        return self.ground == other.ground and self.weights == other.weights

    def __repr__(self):
        return (
            f"ExtendedWeightFunction(n={self.ground.n}, bound={self.bound}, "
            f"weights={self.weights!r})"
        )


def make_weight_function(
    ground: GroundSet, weights: Sequence, bound: int | None = None
) -> ExtendedWeightFunction:
    return ExtendedWeightFunction(ground, weights, bound)


# -- embedding engine ----------------------------------------------------


def _digit_bits(n: int, kind: str) -> int:
    # Digit coefficients count achieving pairs: at most 2**n disjoint
    # splits, at most 3**n covering pairs.  The base must exceed that.
    if kind == "subset":
        return n + 1
    return (3**n).bit_length()


def _embed_packed(shifted: list, bits: int) -> list:
    mx = -1
    for v in shifted:
        if v is not None and v > mx:
            mx = v
    pow_tab = [_ONE << (bits * v) for v in range(mx + 1)]
    zero = _ONE - _ONE
    return [zero if v is None else pow_tab[v] for v in shifted]


def _packed_pipeline(pf: list, pg: list, n: int, kind: str, ell: int) -> list:
    ker = _backend.active
    if kind == "subset":
        return ranked_convolve_values(pf, pg, n, BIGINT)
    if kind == "exact":
        return ranked_convolve_values(pf, pg, n, BIGINT, extra_rank=ell)
    zf = list(pf)
    zg = list(pg)
    zeta_slice(zf, n, BIGINT)
    zeta_slice(zg, n, BIGINT)
    had = ker.mul_obj(zf, zg)
    mobius_slice(had, n, BIGINT)
    if kind == "cover":
        return had
    if kind == "icover":
        # Disjoint pairs are covering pairs with the same weight sum, so
        # the digitwise difference is a valid nonnegative digit vector.
        conv = ranked_convolve_values(pf, pg, n, BIGINT)
        return ker.sub_obj(had, conv)
    raise ValueError(f"unsupported product kind {kind!r}")


def _opt_values(
    fv: list, gv: list, n: int, minimize: bool, kind: str, ell: int = 0
) -> list:
    """Engine over plain lists; entries are ints or None (absorbing)."""
    size = 1 << n
    fin_f = [v for v in fv if v is not None]
    fin_g = [v for v in gv if v is not None]
    if not fin_f or not fin_g:
        return [None] * size
    s_f = max(0, -min(fin_f))
    s_g = max(0, -min(fin_g))
    bits = _digit_bits(n, kind)
    pf = _embed_packed([None if v is None else v + s_f for v in fv], bits)
    pg = _embed_packed([None if v is None else v + s_g for v in gv], bits)
    packed = _packed_pipeline(pf, pg, n, kind, ell)
    shift = s_f + s_g
    out = []
    if minimize:
        for x in packed:
            out.append(None if x == 0 else _lsb_index(x) // bits - shift)
    else:
        for x in packed:
            out.append(None if x == 0 else (x.bit_length() - 1) // bits - shift)
    return out


def _to_engine(f: ExtendedWeightFunction, mode: OptMode) -> list:
    bad = NEG_INF if mode.kind == "min" else INF
    out = []
    for w in f.weights:
        if w is bad:
            raise ValueError(f"{bad!r} is not a valid weight for {mode.kind}-sum")
        out.append(None if isinstance(w, ExtendedInfinity) else w)
    return out


def _from_engine(ground: GroundSet, res: list, mode: OptMode) -> ExtendedWeightFunction:
    absorb = INF if mode.kind == "min" else NEG_INF
    return ExtendedWeightFunction(ground, [absorb if v is None else v for v in res])


def _check_opt_pair(f: ExtendedWeightFunction, g: ExtendedWeightFunction) -> None:
    if f.ground != g.ground:
        raise ValueError(
            f"ground-set mismatch: {f.ground.n} vs {g.ground.n} elements"
        )


def opt_convolve(
    f: ExtendedWeightFunction, g: ExtendedWeightFunction, mode: OptMode
) -> ExtendedWeightFunction:
    """Subset convolution over the min-sum or max-sum semiring.

    output(S) = opt over T ⊆ S of f(T) + g(S∖T), with infinities
    absorbing; output(S) is infinite exactly when no finite pair exists.
    """
    _check_opt_pair(f, g)
    n = f.ground.n
    res = _opt_values(
        _to_engine(f, mode), _to_engine(g, mode), n, mode.kind == "min", "subset"
    )
    return _from_engine(f.ground, res, mode)


_OPT_PRODUCT_KINDS = ("cover", "icover", "exact")


def opt_product(
    f: ExtendedWeightFunction,
    g: ExtendedWeightFunction,
    mode: OptMode,
    product: ProductMode,
) -> ExtendedWeightFunction:
    """Covering-family products over the min-sum or max-sum semiring."""
    _check_opt_pair(f, g)
    n = f.ground.n
    if product.kind not in _OPT_PRODUCT_KINDS:
        raise ValueError(f"unsupported product mode {product} for semiring products")
    ell = 0
    if product.kind == "exact":
        ell = product.ell
        if not 0 <= ell <= n:
            raise ValueError(f"intersection cardinality {ell} outside 0..{n}")
    res = _opt_values(
        _to_engine(f, mode),
        _to_engine(g, mode),
        n,
        mode.kind == "min",
        product.kind,
        ell,
    )
    return _from_engine(f.ground, res, mode)


def _pair_iter(s: int, product: ProductMode):
    """Deterministic pair enumeration for witnesses.

    First components ascend (complements of iterate_subsets order); for
    the covering family, V = (s∖U) ∪ W with W ⊆ U ascending, so second
    components ascend within each U.  W is exactly U ∩ V.
    """
    kind = product.kind
    if kind == "subset":
        for t in iterate_subsets(s):
            yield s ^ t, t
        return
    for t1 in iterate_subsets(s):
        u = s ^ t1
        base = s ^ u
        for t2 in iterate_subsets(u):
            w = u ^ t2
            if kind == "icover" and w == 0:
                continue
            if kind == "exact" and w.bit_count() != product.ell:
                continue
            yield u, base | w


def opt_witness(
    f: ExtendedWeightFunction,
    g: ExtendedWeightFunction,
    mode: OptMode,
    product: ProductMode,
    s: int,
    target,
) -> tuple[int, int]:
    """One pair (U, V) in the product's pair set with f(U) + g(V) = target.

    Deterministic: the first achieving pair in the canonical enumeration
    order.  Raises if nothing achieves the target (inconsistent target,
    or an infinite target, which no finite pair can witness).
    """
    _check_opt_pair(f, g)
    f.ground.check_mask(s)
    if product.kind not in ("subset",) + _OPT_PRODUCT_KINDS:
        raise ValueError(f"unsupported product mode {product} for witnesses")
    if not isinstance(target, ExtendedInfinity):
        for u, v in _pair_iter(s, product):
            a = f.weights[u]
            b = g.weights[v]
            if is_finite(a) and is_finite(b) and a + b == target:
                return u, v
    raise ValueError(f"no pair achieves {target!r} at mask {s}")


def _embedded_digits(
    f: ExtendedWeightFunction,
    g: ExtendedWeightFunction,
    mode: OptMode,
    product: ProductMode = SUBSET,
) -> tuple[list, int, int]:
    """Full digit vectors of the packed product, plus the applied shifts.

    Digit r at mask S counts the product's pairs whose shifted weights
    sum to r.  Experimental read-out surface; used to count optimal
    solutions and to validate digit soundness.
    """
    _check_opt_pair(f, g)
    n = f.ground.n
    fv = _to_engine(f, mode)
    gv = _to_engine(g, mode)
    fin_f = [v for v in fv if v is not None]
    fin_g = [v for v in gv if v is not None]
    size = 1 << n
    if not fin_f or not fin_g:
        return [[] for _ in range(size)], 0, 0
    s_f = max(0, -min(fin_f))
    s_g = max(0, -min(fin_g))
    kind = product.kind if product.kind != "subset" else "subset"
    ell = product.ell if product.kind == "exact" else 0
    bits = _digit_bits(n, kind)
    pf = _embed_packed([None if v is None else v + s_f for v in fv], bits)
    pg = _embed_packed([None if v is None else v + s_g for v in gv], bits)
    packed = _packed_pipeline(pf, pg, n, kind, ell)
    mask = (1 << bits) - 1
    vectors = []
    for x in packed:
        x = int(x)
        digs = []
        while x:
            digs.append(x & mask)
            x >>= bits
        vectors.append(digs)
    return vectors, s_f, s_g


def opt_solution_counts(
    f: ExtendedWeightFunction,
    g: ExtendedWeightFunction,
    mode: OptMode,
    product: ProductMode = SUBSET,
) -> list[int]:
    """Number of pairs achieving the optimum at each mask (0 if infeasible).

    Experimental surface built on the digit embedding: the optimal
    digit's coefficient is exactly the count of optimum-achieving pairs.
    """
    vectors, _, _ = _embedded_digits(f, g, mode, product)
    out = []
    for digs in vectors:
        if not digs:
            out.append(0)
        elif mode.kind == "min":
            out.append(next(d for d in digs if d))
        else:
            out.append(next(d for d in reversed(digs) if d))
    return out


# -- array facades for the solvers ---------------------------------------


def min_cover_self_table(
    vals: np.ndarray, n: int, sentinel: int, scan_masks: np.ndarray | None = None
) -> np.ndarray:
    """Min-sum covering self-product of an int64 table.

    ``sentinel`` encodes +inf in both input and output.  When
    ``scan_masks`` is given, only those masks are digit-scanned (the
    rest stay sentinel); the transform work is the same either way.
    Sums never approach the sentinel, so sentinel arithmetic is exact.
    """
    size = 1 << n
    out = np.full(size, sentinel, dtype=np.int64)
    finite = vals[vals != sentinel]
    if finite.size == 0:
        return out
    ker = _backend.active
    s = max(0, -int(finite.min()))
    mx = int(finite.max()) + s
    bits = _digit_bits(n, "cover")
    pow_tab = [_ONE << (bits * v) for v in range(mx + 1)]
    shifted = np.where(vals == sentinel, sentinel, vals + s)
    packed = ker.embed_pow_obj(
        np.ascontiguousarray(shifted, dtype=np.int64), sentinel, pow_tab
    )
    zeta_slice(packed, n, BIGINT)
    sq = ker.mul_obj(packed, packed)
    mobius_slice(sq, n, BIGINT)
    unshift = 2 * s
    indices = range(size) if scan_masks is None else scan_masks.tolist()
    for m in indices:
        x = sq[m]
        if x != 0:
            out[m] = _lsb_index(x) // bits - unshift
    return out


def min_subset_self_sentinel(vals: list, n: int, sentinel: int) -> list:
    """Min-sum subset self-convolution of an int list with a +inf sentinel."""
    fv = [None if v >= sentinel else v for v in vals]
    res = _opt_values(fv, fv, n, True, "subset")
    return [sentinel if v is None else v for v in res]
