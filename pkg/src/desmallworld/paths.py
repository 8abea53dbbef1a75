"""Short simple paths and their path-algebra sums.

For a pair ``(u, v)`` and edge weights ``x`` in [0, 1]::

    P(u, v)    = sum over simple u-v paths p with |p| <= k of prod_{e in p} x_e
    P(u, v, e) = same sum restricted to paths through e, omitting x_e

With ``x == 1`` these are the path counts |P(u,v)| and |P(u,v,e)|.

Two evaluation routes are provided.  :func:`compute_puve` is the per-source
depth-first traversal that accumulates both sums while walking.
:class:`PathTable` enumerates the paths once into integer arrays and then
evaluates the sums for any ``x`` with numpy; the optimizer uses it because
the path set does not change between iterations.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._parallel import map_chunks
from .graph import Graph
from .reachability import ReachablePairSet, check_k

__all__ = [
    "PathAlgebraState",
    "PairPathAlgebra",
    "compute_puve",
    "path_algebra",
    "path_counts",
    "PathTable",
    "build_path_table",
]


def _as_weights(g: Graph, x):
    if x is None:
        return None
    x = np.asarray(x, dtype=float)
    if x.shape != (g.edge_count,):
        raise ValueError(f"x must have one entry per edge id ({g.edge_count}), got shape {x.shape}")
    if np.any(x < 0) or np.any(x > 1) or not np.all(np.isfinite(x)):
        raise ValueError("edge variables must lie in [0, 1]")
    return x.tolist()


@dataclass
class PathAlgebraState:
    """Sums for the paths leaving one source vertex."""

    source: int
    p_sum: dict = field(default_factory=dict)   # v -> P(u, v)
    pe_sum: dict | None = field(default_factory=dict)  # (v, e) -> P(u, v, e)


def compute_puve(g: Graph, u: int, k: int, x=None, store_edges=True, edges_of_interest=None) -> PathAlgebraState:
    """Depth-first walk from ``u`` over simple paths of at most ``k`` edges.

    ``x`` defaults to all ones.  ``P(u, v, e)`` uses prefix/suffix products
    instead of dividing by ``x_e``, so it stays exact when ``x_e == 0``.
    ``store_edges=False`` skips the per-edge sums; ``edges_of_interest``
    limits them to a subset of edges (the on-demand, low-memory route).
    """
    k = check_k(k)
    if not 0 <= u < g.vertex_count:
        raise ValueError(f"source vertex {u} out of range [0, {g.vertex_count})")
    xs = _as_weights(g, x)
    adj = g.adjacency
    state = PathAlgebraState(u, {}, {} if store_edges else None)
    p_sum = state.p_sum
    pe_sum = state.pe_sum
    wanted = None if edges_of_interest is None else set(edges_of_interest)

    on_path = {u}
    path_edges = []
    prefix = [1.0]   # prefix[i] = product of the first i edge weights

    def walk(z):
        if len(path_edges) == k:
            return
        for v, e in adj[z]:
            if v in on_path:
                continue
            xe = 1.0 if xs is None else xs[e]
            on_path.add(v)
            path_edges.append(e)
            prefix.append(prefix[-1] * xe)
            p_sum[v] = p_sum.get(v, 0.0) + prefix[-1]
            if pe_sum is not None:
                suffix = 1.0
                for i in range(len(path_edges) - 1, -1, -1):
                    ei = path_edges[i]
                    if wanted is None or ei in wanted:
                        key = (v, ei)
                        pe_sum[key] = pe_sum.get(key, 0.0) + prefix[i] * suffix
                    suffix *= 1.0 if xs is None else xs[ei]
            walk(v)
            prefix.pop()
            path_edges.pop()
            on_path.discard(v)

    walk(u)
    return state


@dataclass
class PairPathAlgebra:
    """Sums for every unordered pair, keyed ``(u, v)`` with ``u < v``."""

    k: int
    p_sum: dict
    pe_sum: dict | None   # (u, v, e) -> P(u, v, e)


def _algebra_chunk(g, k, x, store_edges, sources):
    out = []
    for u in sources:
        st = compute_puve(g, u, k, x, store_edges)
        p = {v: s for v, s in st.p_sum.items() if v > u}
        pe = None
        if store_edges:
            pe = {key: s for key, s in st.pe_sum.items() if key[0] > u}
        out.append((u, p, pe))
    return out


def path_algebra(g: Graph, k: int, x=None, store_edges=True, workers=1) -> PairPathAlgebra:
    """Run :func:`compute_puve` from every vertex and keep each unordered
    pair once, from its lower-id endpoint."""
    k = check_k(k)
    p_all, pe_all = {}, ({} if store_edges else None)
    for part in map_chunks(_algebra_chunk, (g, k, x, store_edges), range(g.vertex_count), workers):
        for u, p, pe in part:
            for v, s in p.items():
                p_all[(u, v)] = s
            if store_edges:
                for (v, e), s in pe.items():
                    pe_all[(u, v, e)] = s
    return PairPathAlgebra(k, p_all, pe_all)


def path_counts(g: Graph, k: int, store_edges=True, workers=1) -> PairPathAlgebra:
    """|P(u,v)| and |P(u,v,e)| (the ``x == 1`` case); values are whole numbers."""
    return path_algebra(g, k, None, store_edges, workers)


# ---------------------------------------------------------------------------
# vectorised path table

def _table_chunk(g, k, keep, sources):
    """Enumerate paths from each source to higher-id targets.

    Returns (pair list, path pair-index list, path edge lists) with local
    pair indices.
    """
    n = g.vertex_count
    adj = g.adjacency
    pairs, path_pair, path_edges = [], [], []
    for u in sources:
        local = {}
        on_path = {u}
        stack = []

        def walk(z):
            for v, e in adj[z]:
                if v in on_path:
                    continue
                stack.append(e)
                if v > u and (keep is None or u * n + v in keep):
                    idx = local.get(v)
                    if idx is None:
                        idx = local[v] = len(pairs)
                        pairs.append((u, v))
                    path_pair.append(idx)
                    path_edges.append(tuple(stack))
                if len(stack) < k:
                    on_path.add(v)
                    walk(v)
                    on_path.discard(v)
                stack.pop()

        walk(u)
    return pairs, path_pair, path_edges


class PathTable:
    """All short paths of a set of pairs as integer arrays.

    ``pairs``       (n_pairs, 2) array of ``(u, v)`` with ``u < v``
    ``path_pair``   (n_paths,) pair index of each path
    ``path_edges``  (n_paths, k) edge ids, right-padded with ``edge_count``
    """

    def __init__(self, k, edge_count, pairs, path_pair, path_edges, vertex_count):
        self.k = k
        self.edge_count = edge_count
        self.vertex_count = vertex_count
        self.pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        self.path_pair = np.asarray(path_pair, dtype=np.int64)
        self.path_edges = np.asarray(path_edges, dtype=np.int64).reshape(-1, k)

    @property
    def n_pairs(self):
        return len(self.pairs)

    @property
    def n_paths(self):
        return len(self.path_pair)

    def pair_codes(self):
        return self.pairs[:, 0] * self.vertex_count + self.pairs[:, 1]

    def pair_set(self) -> ReachablePairSet:
        return ReachablePairSet(self.k, self.vertex_count, np.sort(self.pair_codes()))

    def path_lengths(self):
        return (self.path_edges < self.edge_count).sum(axis=1)

    def edges_used(self) -> np.ndarray:
        """Sorted ids of edges lying on at least one stored path."""
        e = np.unique(self.path_edges)
        return e[e < self.edge_count]

    def _ext(self, x):
        if x is None:
            return np.ones(self.edge_count + 1)
        x = np.asarray(x, dtype=float)
        if x.shape != (self.edge_count,):
            raise ValueError(f"x must have length {self.edge_count}")
        return np.append(x, 1.0)

    def products(self, x=None):
        """Per-path product of edge weights and the (n_paths, k) matrix of
        products leaving out each position."""
        w = self._ext(x)[self.path_edges]
        n, k = w.shape
        pre = np.ones((n, k + 1))
        np.cumprod(w, axis=1, out=pre[:, 1:])
        suf = np.ones((n, k + 1))
        suf[:, :k] = np.cumprod(w[:, ::-1], axis=1)[:, ::-1]
        excl = pre[:, :k] * suf[:, 1:]
        return pre[:, k], excl

    def p_sum(self, x=None) -> np.ndarray:
        prod, _ = self.products(x)
        return np.bincount(self.path_pair, prod, minlength=self.n_pairs)

    def pe_sum(self, x=None) -> dict:
        """``{(u, v, e): P(u, v, e)}`` for the stored pairs (test/diagnostic use)."""
        _, excl = self.products(x)
        out = {}
        for i in range(self.n_paths):
            u, v = self.pairs[self.path_pair[i]]
            for j, e in enumerate(self.path_edges[i]):
                if e < self.edge_count:
                    key = (int(u), int(v), int(e))
                    out[key] = out.get(key, 0.0) + excl[i, j]
        return out

    def objective_and_gradient(self, x, lam):
        """Sum of exp(-lam * P(u,v)) over the stored pairs and its gradient
        with respect to every edge variable."""
        prod, excl = self.products(x)
        P = np.bincount(self.path_pair, prod, minlength=self.n_pairs)
        terms = np.exp(-lam * P)
        weight = (-lam * terms)[self.path_pair]
        grad = np.bincount(self.path_edges.ravel(), (excl * weight[:, None]).ravel(),
                           minlength=self.edge_count + 1)[: self.edge_count]
        return float(terms.sum()), grad

    def objective(self, x, lam):
        return float(np.exp(-lam * self.p_sum(x)).sum())

    def short_betweenness(self) -> np.ndarray:
        """Per edge: sum over pairs of (paths through the edge) / (all paths)."""
        counts = np.bincount(self.path_pair, minlength=self.n_pairs).astype(float)
        share = (1.0 / counts)[self.path_pair]
        return np.bincount(self.path_edges.ravel(), np.repeat(share, self.k),
                           minlength=self.edge_count + 1)[: self.edge_count]

    def restrict(self, pair_mask) -> "PathTable":
        """Table holding only the pairs where ``pair_mask`` is true."""
        pair_mask = np.asarray(pair_mask, dtype=bool)
        new_index = np.cumsum(pair_mask) - 1
        keep = pair_mask[self.path_pair]
        return PathTable(self.k, self.edge_count, self.pairs[pair_mask],
                         new_index[self.path_pair[keep]], self.path_edges[keep], self.vertex_count)


def build_path_table(g: Graph, k: int, pairs: ReachablePairSet | None = None, workers=1) -> PathTable:
    """Enumerate every simple path of at most ``k`` edges between the given
    pairs (default: all pairs that have one, i.e. the reachable set)."""
    k = check_k(k)
    keep = None
    sources = range(g.vertex_count)
    if pairs is not None:
        keep = set(pairs.codes.tolist())
        sources = np.unique(pairs.pairs()[:, 0]).tolist() if pairs.count else []
    all_pairs, all_pp, all_pe = [], [], []
    for part_pairs, part_pp, part_pe in map_chunks(_table_chunk, (g, k, keep), sources, workers):
        off = len(all_pairs)
        all_pairs.extend(part_pairs)
        all_pp.extend(i + off for i in part_pp)
        all_pe.extend(part_pe)
    m = g.edge_count
    edges = np.full((len(all_pe), k), m, dtype=np.int64)
    for i, p in enumerate(all_pe):
        edges[i, : len(p)] = p
    return PathTable(k, m, all_pairs, all_pp, edges, g.vertex_count)
