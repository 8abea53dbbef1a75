"""k-bounded neighbourhoods and the set of locally reachable vertex pairs.

A pair ``(u, v)`` is reachable when its shortest-path distance is at most
``k``.  Removing edges can only shrink the reachable set, so the number of
pairs an edge set *cuts* is ``|R(G)| - |R(G minus edges)|``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._parallel import map_chunks
from .graph import Graph, edge_subset

__all__ = [
    "ReachablePairSet",
    "check_k",
    "bfs_within",
    "neighborhood_sizes",
    "reachable_pairs",
    "count_reachable_pairs",
    "pairs_cut",
    "cut_pairs",
]


def check_k(k):
    if int(k) != k or k < 2:
        raise ValueError(f"spreading parameter k must be an integer >= 2, got {k!r}")
    return int(k)


def bfs_within(g: Graph, source: int, k: int) -> dict:
    """Distances from ``source`` to every vertex within ``k`` hops (source included)."""
    dist = {source: 0}
    frontier = [source]
    adj = g.adjacency
    for d in range(1, k + 1):
        nxt = []
        for z in frontier:
            for w, _ in adj[z]:
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return dist


def _sizes_chunk(g, k, sources):
    return [len(bfs_within(g, s, k)) - 1 for s in sources]


def _pairs_chunk(g, k, sources):
    n = g.vertex_count
    codes = []
    for s in sources:
        codes.extend(s * n + v for v in bfs_within(g, s, k) if v > s)
    return np.array(codes, dtype=np.int64)


def neighborhood_sizes(g: Graph, k: int, workers: int = 1) -> np.ndarray:
    """``N^k(v)`` for every vertex: vertices other than ``v`` within ``k`` hops."""
    k = check_k(k)
    parts = map_chunks(_sizes_chunk, (g, k), range(g.vertex_count), workers)
    return np.array([c for part in parts for c in part], dtype=np.int64)


def count_reachable_pairs(g: Graph, k: int, workers: int = 1) -> int:
    return int(neighborhood_sizes(g, k, workers).sum()) // 2


@dataclass(frozen=True)
class ReachablePairSet:
    """Unordered pairs ``u < v`` at distance ``<= k``.

    Stored as sorted codes ``u * vertex_count + v``.
    """

    k: int
    vertex_count: int
    codes: np.ndarray

    @property
    def count(self) -> int:
        return int(self.codes.size)

    def __len__(self):
        return self.count

    def __contains__(self, pair):
        u, v = pair
        if u == v:
            return False
        if u > v:
            u, v = v, u
        c = u * self.vertex_count + v
        i = np.searchsorted(self.codes, c)
        return bool(i < self.codes.size and self.codes[i] == c)

    def __iter__(self):
        n = self.vertex_count
        for c in self.codes.tolist():
            yield divmod(c, n)

    def pairs(self) -> np.ndarray:
        """``(count, 2)`` array of ``(u, v)`` rows."""
        u, v = np.divmod(self.codes, self.vertex_count)
        return np.stack([u, v], axis=1)

    def as_set(self) -> set:
        return set(self)

    def difference(self, other: "ReachablePairSet") -> "ReachablePairSet":
        if other.vertex_count != self.vertex_count:
            raise ValueError("pair sets over different vertex counts")
        codes = np.setdiff1d(self.codes, other.codes, assume_unique=True)
        return ReachablePairSet(self.k, self.vertex_count, codes)


def reachable_pairs(g: Graph, k: int, workers: int = 1) -> ReachablePairSet:
    k = check_k(k)
    parts = map_chunks(_pairs_chunk, (g, k), range(g.vertex_count), workers)
    codes = np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)
    codes.sort()
    return ReachablePairSet(k, g.vertex_count, codes)


def pairs_cut(g: Graph, k: int, s, baseline: ReachablePairSet | None = None, workers: int = 1) -> int:
    """Number of pairs reachable in ``g`` that are no longer reachable once
    the edges ``s`` are removed (their distance exceeds ``k``)."""
    k = check_k(k)
    if baseline is None:
        before = count_reachable_pairs(g, k, workers)
    else:
        if baseline.k != k:
            raise ValueError(f"baseline computed for k={baseline.k}, not k={k}")
        if baseline.vertex_count != g.vertex_count:
            raise ValueError("baseline computed on a different graph")
        before = baseline.count
    s = edge_subset(g, s)
    if not s:
        return 0
    return before - count_reachable_pairs(g.remove_edges(s), k, workers)


def cut_pairs(g: Graph, k: int, s, baseline: ReachablePairSet | None = None) -> ReachablePairSet:
    """The pairs themselves that removing ``s`` cuts."""
    if baseline is None:
        baseline = reachable_pairs(g, k)
    return baseline.difference(reachable_pairs(g.remove_edges(s), k))
