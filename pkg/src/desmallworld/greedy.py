"""Batch-greedy edge selection by a betweenness score.

Pick the ``r`` best-scoring edges, mask them, rescore the remaining graph and
repeat until ``L`` edges are chosen.  ``r == L`` is a single scoring pass.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .betweenness import global_betweenness, local_betweenness, short_betweenness
from .graph import Graph
from .reachability import check_k

__all__ = ["SelectionConfig", "select_greedy", "score_edges", "METHODS"]

METHODS = ("BT", "LB", "SB")


@dataclass(frozen=True)
class SelectionConfig:
    method: str
    L: int
    r: int | None = None    # batch size, defaults to L
    k: int = 3

    @property
    def batch(self):
        return self.L if self.r is None else self.r

    def validate(self, g: Graph):
        if self.method.upper() not in METHODS:
            raise ValueError(f"unknown scoring method {self.method!r}; expected one of {METHODS}")
        check_k(self.k)
        if self.L < 1:
            raise ValueError("budget L must be at least 1")
        if self.L >= g.active_edge_count:
            raise ValueError(f"budget L={self.L} must be smaller than |E|={g.active_edge_count}")
        if not 1 <= self.batch <= self.L:
            raise ValueError(f"batch size r={self.batch} must lie in [1, L]")


def score_edges(g: Graph, method: str, k: int, workers=1):
    method = method.upper()
    if method == "BT":
        return global_betweenness(g, workers)
    if method == "LB":
        return local_betweenness(g, k, workers)
    if method == "SB":
        return short_betweenness(g, k, workers=workers)
    raise ValueError(f"unknown scoring method {method!r}")


def select_greedy(g: Graph, cfg: SelectionConfig, workers=1) -> frozenset:
    cfg.validate(g)
    chosen: list[int] = []
    view = g
    for _ in range(math.ceil(cfg.L / cfg.batch)):
        take = min(cfg.batch, cfg.L - len(chosen))
        scores = score_edges(view, cfg.method, cfg.k, workers)
        # masked edges score 0 but must never be picked again
        batch = scores.top(take, exclude=view.removed)
        chosen.extend(batch)
        view = view.remove_edges(batch)
    return frozenset(chosen)
