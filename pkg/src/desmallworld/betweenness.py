"""Edge importance scores: global, local (distance <= k) and short betweenness.

Pairs are counted unordered, once each.  Summing over ordered pairs instead
would double every score, which changes no ranking.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from ._parallel import map_chunks
from .graph import Graph
from .paths import PathTable, build_path_table
from .reachability import check_k

__all__ = [
    "EdgeScores",
    "global_betweenness",
    "local_betweenness",
    "short_betweenness",
    "top_edges",
    "gradient_lower_bound_check",
    "LowerBoundReport",
]


@dataclass
class EdgeScores:
    method: str
    score: np.ndarray   # indexed by edge id

    def __len__(self):
        return len(self.score)

    def top(self, count, exclude=()):
        return top_edges(self.score, count, exclude)

    def to_csv(self, g: Graph, path):
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["edge_id", "u", "v", "score"])
            for e, (u, v) in enumerate(g.edges):
                w.writerow([e, u, v, repr(float(self.score[e]))])


def top_edges(score, count, exclude=()):
    """Ids of the ``count`` highest scores; ties go to the lower edge id."""
    score = np.asarray(score, dtype=float)
    ids = np.arange(len(score))
    if exclude:
        keep = np.ones(len(score), dtype=bool)
        keep[list(exclude)] = False
        ids = ids[keep]
    order = np.lexsort((ids, -score[ids]))
    return [int(e) for e in ids[order[:count]]]


def _brandes_chunk(g, cutoff, sources):
    """Edge dependencies accumulated from each source over shortest paths of
    length <= cutoff (``None`` for no limit)."""
    adj = g.adjacency
    acc = np.zeros(g.edge_count)
    for s in sources:
        order = [s]
        dist = {s: 0}
        sigma = {s: 1}
        preds = {s: []}
        i = 0
        while i < len(order):
            z = order[i]
            i += 1
            dz = dist[z]
            if cutoff is not None and dz == cutoff:
                continue
            for w, e in adj[z]:
                dw = dist.get(w)
                if dw is None:
                    dist[w] = dw = dz + 1
                    sigma[w] = 0
                    preds[w] = []
                    order.append(w)
                if dw == dz + 1:
                    sigma[w] += sigma[z]
                    preds[w].append((z, e))
        delta = dict.fromkeys(order, 0.0)
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for z, e in preds[w]:
                c = sigma[z] * coeff
                acc[e] += c
                delta[z] += c
    return acc


def _betweenness(g, cutoff, workers):
    parts = map_chunks(_brandes_chunk, (g, cutoff), range(g.vertex_count), workers)
    total = np.zeros(g.edge_count)
    for p in parts:
        total += p
    # every unordered pair was reached from both of its endpoints
    return total / 2.0


def global_betweenness(g: Graph, workers=1) -> EdgeScores:
    """Sum over unordered pairs of the share of their shortest paths using each edge."""
    if g.vertex_count == 0:
        raise ValueError("empty graph")
    return EdgeScores("BT", _betweenness(g, None, workers))


def local_betweenness(g: Graph, k: int, workers=1) -> EdgeScores:
    """Like :func:`global_betweenness` but only over pairs at distance <= k."""
    k = check_k(k)
    return EdgeScores("LB", _betweenness(g, k, workers))


def short_betweenness(g: Graph, k: int, table: PathTable | None = None, workers=1) -> EdgeScores:
    """Sum over reachable pairs of (short paths through e) / (all short paths),
    where short paths are the simple paths of at most ``k`` edges."""
    k = check_k(k)
    if table is None:
        table = build_path_table(g, k, workers=workers)
    return EdgeScores("SB", table.short_betweenness())


@dataclass
class LowerBoundReport:
    gradient: np.ndarray
    short_betweenness: np.ndarray
    max_violation: float    # max over edges of -SB(e) - g(e); <= 0 when the bound holds

    @property
    def holds(self):
        return self.max_violation <= 1e-9


def gradient_lower_bound_check(g: Graph, k: int, lam: float = 1.0, table: PathTable | None = None) -> LowerBoundReport:
    """Evaluate the objective gradient at x = 1 and compare it with -SB(e)."""
    k = check_k(k)
    if table is None:
        table = build_path_table(g, k)
    _, grad = table.objective_and_gradient(np.ones(g.edge_count), lam)
    sb = table.short_betweenness()
    viol = float(np.max(-sb - grad)) if g.edge_count else 0.0
    return LowerBoundReport(grad, sb, viol)
