"""Run a selection method on a graph and measure how many reachable pairs it cuts."""
from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field

from .graph import Graph
from .greedy import SelectionConfig, select_greedy
from .optimizer import OptimizerConfig, optimize
from .oracle import exhaustive_optimum
from .paths import build_path_table
from .reachability import check_k, count_reachable_pairs, reachable_pairs

__all__ = ["RunReport", "METHODS", "run", "compare", "write_reports", "write_removed_edges", "CSV_FIELDS"]

METHODS = ("bt", "lb", "sb", "omw", "omo", "greedy-bt", "greedy-lb", "greedy-sb", "oracle")

CSV_FIELDS = ["method", "k", "L", "r", "lambda", "beta", "alpha", "vertices", "edges",
              "pairs_before", "pairs_after", "pairs_cut", "delta", "iterations", "runtime_ms"]


@dataclass
class RunReport:
    method: str
    k: int
    L: int
    r: int | None
    lam: float | None
    beta: float | None
    alpha: float | None
    vertices: int
    edges: int
    pairs_before: int
    pairs_after: int
    pairs_cut: int
    delta: float
    iterations: int
    runtime_ms: float
    removed_edges: list = field(default_factory=list)
    raw_edges: int | None = None
    stop_reason: str = ""
    trace: object = field(default=None, repr=False)   # OptimizerTrace for omo/omw

    def row(self):
        out = {}
        for name in CSV_FIELDS:
            value = getattr(self, "lam" if name == "lambda" else name)
            out[name] = "" if value is None else value
        return out


def _select(g, method, k, L, r, lam, beta, alpha, max_iters, tol, table, workers, opt_extra):
    """Returns (edge ids, iterations, stop reason, effective r, trace)."""
    if method in ("bt", "lb", "sb", "greedy-bt", "greedy-lb", "greedy-sb"):
        score = method.split("-")[-1].upper()
        if r is None:
            r = 1 if method.startswith("greedy") else L
        cfg = SelectionConfig(score, L, r, k)
        return select_greedy(g, cfg, workers), -(-L // cfg.batch), "", cfg.batch, None
    if method in ("omo", "omw"):
        cfg = OptimizerConfig(k=k, L=L, lam=lam, beta=beta, max_iters=max_iters, tol=tol,
                              mode=method.upper(), alpha=alpha, **opt_extra)
        if table is None:
            table = build_path_table(g, k, workers=workers)
        chosen, trace = optimize(g, cfg, table)
        return chosen, trace.iterations, trace.stop_reason, None, trace
    if method == "oracle":
        res = exhaustive_optimum(g, k, L)
        return res.best_subset, res.evaluated, "", None, None
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def run(g: Graph, method: str, k: int, L: int, r: int | None = None, lam: float = 1.0,
        beta: float = 0.05, alpha: float = 5.0, max_iters: int = 200, tol: float = 1e-4,
        pairs_before: int | None = None, table=None, workers: int = 1,
        **optimizer_options) -> RunReport:
    """Select ``L`` edges with ``method`` and report pairs cut and ``delta``.

    ``pairs_after`` is always recomputed from scratch on the masked graph.
    Extra keyword arguments (``normalize_step``, ``release_rule``) go to
    :class:`OptimizerConfig`.
    """
    method = method.lower()
    k = check_k(k)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
    if not 1 <= L < g.active_edge_count:
        raise ValueError(f"budget L={L} must lie in [1, |E|) with |E|={g.active_edge_count}")
    if pairs_before is None:
        pairs_before = count_reachable_pairs(g, k, workers)
    t0 = time.perf_counter()
    chosen, iters, reason, r_used, trace = _select(g, method, k, L, r, lam, beta, alpha,
                                                   max_iters, tol, table, workers,
                                                   optimizer_options)
    runtime = (time.perf_counter() - t0) * 1000.0
    chosen = sorted(chosen)
    if len(chosen) != L:
        raise RuntimeError(f"{method} returned {len(chosen)} edges instead of {L}")
    after = count_reachable_pairs(g.remove_edges(chosen), k, workers)
    cut = pairs_before - after
    is_opt = method in ("omo", "omw")
    return RunReport(
        method=method, k=k, L=L, r=r_used,
        lam=lam if is_opt else None, beta=beta if is_opt else None,
        alpha=alpha if method == "omw" else None,
        vertices=g.vertex_count, edges=g.active_edge_count,
        pairs_before=pairs_before, pairs_after=after, pairs_cut=cut, delta=cut / L,
        iterations=iters, runtime_ms=round(runtime, 3),
        removed_edges=[g.edges[e] for e in chosen], raw_edges=g.raw_edge_count,
        stop_reason=reason, trace=trace,
    )


def compare(g: Graph, methods, k: int, L: int, workers: int = 1, **kwargs):
    """Run several methods on the same instance.

    Returns ``(reports, ranking)`` where ``ranking`` lists method names by
    decreasing ``delta`` (ties keep the input order).
    """
    k = check_k(k)
    before = reachable_pairs(g, k, workers).count
    table = None
    if any(m.lower() in ("omo", "omw") for m in methods):
        table = build_path_table(g, k, workers=workers)
    reports = [run(g, m, k, L, pairs_before=before, table=table, workers=workers, **kwargs)
               for m in methods]
    ranking = [rep.method for rep in sorted(reports, key=lambda rep: -rep.delta)]
    return reports, ranking


def write_reports(reports, path, append=False):
    mode = "a" if append else "w"
    with open(path, mode, newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        if not append or fh.tell() == 0:
            w.writeheader()
        for rep in reports:
            w.writerow(rep.row())


def write_removed_edges(report: RunReport, path):
    with open(path, "w") as fh:
        for u, v in report.removed_edges:
            fh.write(f"{u} {v}\n")
