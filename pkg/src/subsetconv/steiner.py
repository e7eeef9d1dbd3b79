"""Minimum Steiner tree: Dreyfus–Wagner, accelerated variant, brute force.

The dynamic-programming table W[X][q] holds the optimal weight of a
tree connecting vertex q together with the terminals in mask X; the
recursion decomposes an optimal tree at q into a shortest path q-p plus
two smaller trees rooted at p over a proper split of X.

The classic solver evaluates the split minimum directly (O*(3^k n));
the accelerated solver works level-wise over |X| and replaces the split
minimum with a min-sum covering self-product of the banded table

    f_p(X) = W[X][p]  if 1 <= |X| <= level-1,  +inf otherwise,

which is exact because W is monotone under set inclusion, and costs
O*(2^k n^2 M) in total.  Both produce identical weights; reconstruction
back-traces the W table re-deriving splits, so trees may differ under
ties (tie-break: lowest vertex p first, then the first achieving split
in iterate_subsets order).

The classic baseline uses the finite sentinel (n-1)*M + 1 for
"unreachable" (strictly above any real tree weight); the accelerated
variant treats infinities as absorbing inside the semiring product and
stores them as a large int64 sentinel whose pairwise sums stay below
2**63.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import numpy as np

from .core import GroundSet, iterate_subsets, popcounts
from .errors import GuardError
from .optimize import INF, ExtendedInfinity, min_cover_self_table

_FAST_SENT = 1 << 61


class WeightedGraph:
    """Undirected graph, 1-based vertices, positive integer edge weights.

    Parallel edges collapse to their minimum weight; self-loops are
    rejected.
    """

    __slots__ = ("n_vertices", "edges", "_adj", "_wmap")

    def __init__(self, n_vertices: int, edges):
        if not isinstance(n_vertices, int) or n_vertices < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n_vertices!r}")
        self.n_vertices = n_vertices
        collapsed: dict[tuple[int, int], int] = {}
        for u, v, w in edges:
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ValueError(f"vertices must be integers, got ({u!r}, {v!r})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not 1 <= u <= n_vertices or not 1 <= v <= n_vertices:
                raise ValueError(f"edge ({u}, {v}) outside 1..{n_vertices}")
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise ValueError(f"edge weight must be a positive integer, got {w!r}")
            key = (u, v) if u < v else (v, u)
            old = collapsed.get(key)
            if old is None or w < old:
                collapsed[key] = w
        self.edges = [(u, v, w) for (u, v), w in sorted(collapsed.items())]
        self._adj = None
        self._wmap = collapsed

    @property
    def max_weight(self) -> int:
        return max((w for _, _, w in self.edges), default=1)

    def adjacency(self) -> list:
        """0-based adjacency: adj[v] = list of (neighbor, weight)."""
        if self._adj is None:
            adj = [[] for _ in range(self.n_vertices)]
            for u, v, w in self.edges:
                adj[u - 1].append((v - 1, w))
                adj[v - 1].append((u - 1, w))
            for row in adj:
                row.sort()
            self._adj = adj
        return self._adj

    def weight_of(self, u: int, v: int) -> int:
        return self._wmap[(u, v) if u < v else (v, u)]


@dataclass(frozen=True)
class SteinerInstance:
    graph: WeightedGraph
    terminals: tuple

    def __init__(self, graph: WeightedGraph, terminals):
        terms = tuple(sorted(terminals))
        if len(set(terms)) != len(terms):
            raise ValueError("terminals must be distinct")
        for t in terms:
            if not 1 <= t <= graph.n_vertices:
                raise ValueError(f"terminal {t} outside 1..{graph.n_vertices}")
        GroundSet(len(terms))  # enforces the k <= 28 cap
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "terminals", terms)


@dataclass
class SteinerResult:
    weight: int | ExtendedInfinity
    tree_edges: list = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return not isinstance(self.weight, ExtendedInfinity)


def _dijkstra_all(graph: WeightedGraph):
    """Per-source Dijkstra; returns 0-based dist and predecessor tables.

    Deterministic: heap ties break on vertex index, relaxations only on
    strict improvement.  Unreachable entries are None.
    """
    n = graph.n_vertices
    adj = graph.adjacency()
    dist = []
    parent = []
    for src in range(n):
        d = [None] * n
        par = [None] * n
        d[src] = 0
        heap = [(0, src)]
        while heap:
            du, u = heapq.heappop(heap)
            if du > d[u]:
                continue
            for v, w in adj[u]:
                nd = du + w
                if d[v] is None or nd < d[v]:
                    d[v] = nd
                    par[v] = u
                    heapq.heappush(heap, (nd, v))
        dist.append(d)
        parent.append(par)
    return dist, parent


def apsp(graph: WeightedGraph) -> list:
    """All-pairs shortest-path matrix, 0-based; unreachable pairs are inf."""
    dist, _ = _dijkstra_all(graph)
    return [[INF if d is None else d for d in row] for row in dist]


def _terminal_bits(terms: tuple) -> dict:
    return {t - 1: i for i, t in enumerate(terms)}


def _classic_tables(inst: SteinerInstance):
    graph = inst.graph
    terms = inst.terminals
    n = graph.n_vertices
    k = len(terms)
    dist, parent = _dijkstra_all(graph)
    sent = max(1, (n - 1) * graph.max_weight + 1)
    d = [[sent if x is None else x for x in row] for row in dist]
    size = 1 << k
    w = [None] * size
    w[0] = [0] * n
    for i, t in enumerate(terms):
        w[1 << i] = list(d[t - 1])
    tbit = _terminal_bits(terms)
    pc = popcounts(k)
    order = sorted(range(size), key=pc.__getitem__)
    for mask in order:
        if pc[mask] < 2 or pc[mask] > k - 1:
            continue
        g = [sent] * n
        for p in range(n):
            best = sent
            sub = (mask - 1) & mask
            while sub:
                cand = w[sub][p] + w[mask ^ sub][p]
                if cand < best:
                    best = cand
                sub = (sub - 1) & mask
            g[p] = best
        row = [0] * n
        for q in range(n):
            i = tbit.get(q)
            if i is not None and mask >> i & 1:
                row[q] = w[mask ^ (1 << i)][q]
                continue
            dq = d[q]
            best = sent
            for p in range(n):
                cand = dq[p] + g[p]
                if cand < best:
                    best = cand
            row[q] = best
        w[mask] = row
    return w, d, parent, sent


def _expand_path(q: int, p: int, parent, graph: WeightedGraph, edges: set) -> None:
    v = p
    while v != q:
        u = parent[q][v]
        a, b = (u + 1, v + 1) if u < v else (v + 1, u + 1)
        edges.add((a, b, graph.weight_of(a, b)))
        v = u


def _backtrace(mask, q, w_at, d_at, parent, graph, terms, sent, edges):
    """Re-derive one optimal decomposition of (mask, q) and collect edges.

    Tie-break: lowest p first, then the first achieving split in
    iterate_subsets order.  At an optimum the three pieces are
    edge-disjoint (otherwise their union would beat the optimum), so
    collecting into a set never drops weight.
    """
    if mask == 0:
        return
    if mask & (mask - 1) == 0:
        t = terms[mask.bit_length() - 1] - 1
        _expand_path(q, t, parent, graph, edges)
        return
    i = {t - 1: j for j, t in enumerate(terms)}.get(q)
    if i is not None and mask >> i & 1:
        _backtrace(mask ^ (1 << i), q, w_at, d_at, parent, graph, terms, sent, edges)
        return
    target = w_at(mask, q)
    n = graph.n_vertices
    for p in range(n):
        dp = d_at(q, p)
        if dp >= sent or dp > target:
            continue
        rem = target - dp
        for sub in iterate_subsets(mask):
            if sub == mask or sub == 0:
                continue
            if w_at(sub, p) + w_at(mask ^ sub, p) == rem:
                _expand_path(q, p, parent, graph, edges)
                _backtrace(sub, p, w_at, d_at, parent, graph, terms, sent, edges)
                _backtrace(
                    mask ^ sub, p, w_at, d_at, parent, graph, terms, sent, edges
                )
                return
    raise AssertionError(f"no decomposition achieves {target} at ({mask:#x}, {q})")


def _finish(inst: SteinerInstance, w_at, d_at, parent, sent) -> SteinerResult:
    terms = inst.terminals
    k = len(terms)
    if k <= 1:
        return SteinerResult(0, [])
    full = (1 << k) - 1
    top = full ^ 1
    q0 = terms[0] - 1
    weight = w_at(top, q0)
    if weight >= sent:
        return SteinerResult(INF, [])
    edges: set = set()
    _backtrace(top, q0, w_at, d_at, parent, inst.graph, terms, sent, edges)
    return SteinerResult(weight, sorted(edges))


def dreyfus_wagner_classic(inst: SteinerInstance) -> SteinerResult:
    """Bottom-up evaluation of the split recursion, O*(3^k n + 2^k n^2 + nm)."""
    w, d, parent, sent = _classic_tables(inst)

    def w_at(mask, q):
        return w[mask][q]

    def d_at(q, p):
        return d[q][p]

    return _finish(inst, w_at, d_at, parent, sent)


def _fast_tables(inst: SteinerInstance):
    graph = inst.graph
    terms = inst.terminals
    n = graph.n_vertices
    k = len(terms)
    dist, parent = _dijkstra_all(graph)
    sent = _FAST_SENT
    d_np = np.full((n, n), sent, dtype=np.int64)
    for u in range(n):
        row = dist[u]
        for v in range(n):
            if row[v] is not None:
                d_np[u, v] = row[v]
    size = 1 << k
    w = np.full((size, n), sent, dtype=np.int64)
    w[0, :] = 0
    for i, t in enumerate(terms):
        w[1 << i, :] = d_np[:, t - 1]
    pc = np.array(popcounts(k), dtype=np.int64) if k else np.zeros(1, dtype=np.int64)
    for level in range(2, k):
        band = (pc >= 1) & (pc <= level - 1)
        level_masks = np.nonzero(pc == level)[0]
        g = np.empty((n, level_masks.size), dtype=np.int64)
        for p in range(n):
            fvals = np.where(band, w[:, p], sent)
            row = min_cover_self_table(fvals, k, sent, scan_masks=level_masks)
            g[p] = row[level_masks]
        for q in range(n):
            cand = (d_np[q][:, None] + g).min(axis=0)
            w[level_masks, q] = np.minimum(cand, sent)
        for i, t in enumerate(terms):
            bit = 1 << i
            with_bit = level_masks[(level_masks & bit) != 0]
            w[with_bit, t - 1] = w[with_bit ^ bit, t - 1]
    return w, d_np, parent, sent


def dreyfus_wagner_fast(inst: SteinerInstance) -> SteinerResult:
    """Level-wise evaluation with covering self-products, O*(2^k n^2 M + nm log M).

    Weights always equal the classic solver's; under ties the
    reconstructed tree may differ from the classic one but is verified
    weight-equal.
    """
    w, d_np, parent, sent = _fast_tables(inst)

    def w_at(mask, q):
        return int(w[mask, q])

    def d_at(q, p):
        return int(d_np[q, p])

    return _finish(inst, w_at, d_at, parent, sent)


def steiner_brute(inst: SteinerInstance, max_edges: int = 16) -> SteinerResult:
    """Exhaustive minimum over acyclic edge subsets connecting the terminals."""
    graph = inst.graph
    m = len(graph.edges)
    if m > max_edges:
        raise GuardError(f"steiner_brute guard: m={m} exceeds the cap of {max_edges}")
    terms = [t - 1 for t in inst.terminals]
    if len(terms) <= 1:
        return SteinerResult(0, [])
    n = graph.n_vertices
    best_weight = None
    best_edges = None
    for subset in range(1 << m):
        par = list(range(n))

        def find(x):
            while par[x] != x:
                par[x] = par[par[x]]
                x = par[x]
            return x

        weight = 0
        acyclic = True
        for idx in range(m):
            if subset >> idx & 1:
                u, v, wgt = graph.edges[idx]
                ru, rv = find(u - 1), find(v - 1)
                if ru == rv:
                    acyclic = False
                    break
                par[ru] = rv
                weight += wgt
        if not acyclic:
            continue
        if best_weight is not None and weight >= best_weight:
            continue
        root = find(terms[0])
        if all(find(t) == root for t in terms[1:]):
            best_weight = weight
            best_edges = [graph.edges[i] for i in range(m) if subset >> i & 1]
    if best_weight is None:
        return SteinerResult(INF, [])
    return SteinerResult(best_weight, sorted(best_edges))
