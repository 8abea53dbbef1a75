"""Relaxed edge-removal optimizer.

Each edge gets a weight ``x_e`` in [0, 1] (1 = kept, 0 = removed) and we
maximize::

    F(x) = sum over pairs (u, v) of exp(-lam * P(u, v))

subject to ``0 <= x_e <= 1`` and ``sum(x) >= |C| - L`` where ``C`` is the set
of free variables.  The ascent is a projected gradient step with an active
set of variables pinned at a bound; once the budget constraint is violated
the step uses gradients centred on their mean, which moves weight between
variables instead of lowering all of them.  The ``L`` smallest weights are
the edges to remove.

Mode ``OMO`` optimizes every edge.  Mode ``OMW`` first takes the
``alpha * L`` edges of highest short betweenness as candidates, keeps every
other edge fixed at 1, restricts the objective to the pairs those candidates
can cut at all, and drops edges that lie on no short path of such a pair.
"""
from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .betweenness import short_betweenness
from .graph import Graph
from .paths import PathTable, build_path_table
from .reachability import ReachablePairSet, check_k, reachable_pairs

__all__ = [
    "OptimizerConfig",
    "OptimizerTrace",
    "CandidateSet",
    "objective",
    "gradients",
    "candidate_set",
    "optimize",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class OptimizerConfig:
    k: int = 3
    L: int = 1
    lam: float = 1.0
    beta: float = 0.05
    max_iters: int = 200
    tol: float = 1e-4
    mode: str = "OMO"
    alpha: float = 5.0
    rng_seed: int = 0          # reserved; the optimizer is deterministic
    # beta is the largest change any variable sees in the first step: the
    # raw gradient is divided by its initial max magnitude
    normalize_step: bool = True
    # "inward": release a pinned variable when its step points into the box;
    # "literal": release when it points outward (then it re-pins at once)
    release_rule: str = "inward"

    def validate(self):
        check_k(self.k)
        if self.L < 1:
            raise ValueError("budget L must be at least 1")
        for name in ("lam", "beta", "tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be positive")
        if self.mode.upper() not in ("OMO", "OMW"):
            raise ValueError(f"unknown optimizer mode {self.mode!r}")
        if self.release_rule not in ("inward", "literal"):
            raise ValueError(f"unknown release rule {self.release_rule!r}")
        if self.mode.upper() == "OMW" and self.alpha < 1:
            raise ValueError("alpha must be >= 1")


@dataclass
class OptimizerTrace:
    objective: list = field(default_factory=list)
    sum_x: list = field(default_factory=list)
    active_count: list = field(default_factory=list)
    max_dx: list = field(default_factory=list)
    stop_reason: str = ""
    x: np.ndarray | None = None
    candidates: np.ndarray | None = None
    pairs: ReachablePairSet | None = None

    @property
    def iterations(self):
        return len(self.objective) - 1

    def record(self, obj, sum_x, active, dx):
        self.objective.append(obj)
        self.sum_x.append(sum_x)
        self.active_count.append(active)
        self.max_dx.append(dx)

    def max_decrease(self):
        """Largest drop of the objective between consecutive iterations."""
        if len(self.objective) < 2:
            return 0.0
        return float(max(0.0, -np.min(np.diff(self.objective))))

    def to_csv(self, path):
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["iteration", "objective", "sum_x", "active_count", "max_dx"])
            for i in range(len(self.objective)):
                w.writerow([i, repr(self.objective[i]), repr(self.sum_x[i]),
                            self.active_count[i], repr(self.max_dx[i])])


def _table_for(g, k, pairs):
    return build_path_table(g, k, pairs)


def objective(g: Graph, k: int, lam: float, x, pairs: ReachablePairSet | None = None) -> float:
    """``sum exp(-lam * P(u, v))`` over ``pairs`` (default: all reachable pairs)."""
    return _table_for(g, check_k(k), pairs).objective(x, lam)


def gradients(g: Graph, k: int, lam: float, x, pairs: ReachablePairSet | None = None) -> np.ndarray:
    """``-lam * sum P(u, v, e) exp(-lam * P(u, v))`` for every edge id."""
    return _table_for(g, check_k(k), pairs).objective_and_gradient(x, lam)[1]


@dataclass
class CandidateSet:
    edges: np.ndarray          # E_s, sorted edge ids
    pairs: ReachablePairSet    # R_s, pairs that removing all of E_s cuts
    path_edges: np.ndarray     # E_P, edges on a short path of some R_s pair
    table: PathTable           # short paths of the R_s pairs

    def pruned(self, g: Graph) -> Graph:
        """``g`` with every edge outside E_P masked."""
        keep = set(self.path_edges.tolist())
        return g.remove_edges(e for e in g.active_edges() if e not in keep)


def candidate_set(g: Graph, k: int, L: int, alpha: float = 5.0, table: PathTable | None = None) -> CandidateSet:
    k = check_k(k)
    size = math.ceil(alpha * L)
    if size > g.active_edge_count:
        raise ValueError(f"alpha*L={size} exceeds the number of edges ({g.active_edge_count})")
    if table is None:
        table = build_path_table(g, k)
    sb = short_betweenness(g, k, table=table)
    es = np.array(sorted(sb.top(size, exclude=g.removed)), dtype=np.int64)
    after = reachable_pairs(g.remove_edges(es.tolist()), k)
    codes = table.pair_codes()
    mask = ~np.isin(codes, after.codes)
    sub = table.restrict(mask)
    return CandidateSet(es, sub.pair_set(), sub.edges_used(), sub)


def optimize(g: Graph, cfg: OptimizerConfig, table: PathTable | None = None):
    """Run the active-set gradient ascent; returns ``(edges, trace)``.

    ``table`` may carry a precomputed path table over all reachable pairs
    of ``g``.
    """
    cfg.validate()
    k, L, lam = cfg.k, cfg.L, cfg.lam
    m = g.edge_count
    if L >= g.active_edge_count:
        raise ValueError(f"budget L={L} must be smaller than |E|={g.active_edge_count}")
    if table is None:
        table = build_path_table(g, k)

    if cfg.mode.upper() == "OMW":
        cand = candidate_set(g, k, L, cfg.alpha, table)
        C = cand.edges
        table = cand.table
    else:
        C = np.array(g.active_edges(), dtype=np.int64)

    trace = OptimizerTrace(candidates=C, pairs=table.pair_set())
    x = np.ones(m)
    if table.n_pairs == 0:
        log.warning("no pairs to cut; returning the %d lowest-id candidate edges", L)
    if L >= len(C):
        trace.x = x
        trace.stop_reason = "budget covers all candidates"
        trace.record(table.objective(x, lam), float(len(C)), 0, 0.0)
        return frozenset(C.tolist()), trace

    active = np.zeros(len(C), dtype=bool)
    obj, grad = table.objective_and_gradient(x, lam)
    trace.record(obj, float(x[C].sum()), 0, 0.0)
    floor = len(C) - L
    beta = cfg.beta
    if cfg.normalize_step and len(C):
        scale = float(np.max(np.abs(grad[C])))
        if scale > 0:
            beta = cfg.beta / scale

    for _ in range(cfg.max_iters):
        gC = grad[C]
        free = ~active
        gbar = float(gC[free].mean()) if free.any() else float(gC.mean())
        xC = x[C]
        # the budget test uses the iterate from the previous iteration
        direction = gC - gbar if xC.sum() < floor else gC

        # halve the step until the objective does not drop
        step = beta
        while True:
            new = xC.copy()
            new[free] = np.clip(xC[free] + step * direction[free], 0.0, 1.0)
            x_try = x.copy()
            x_try[C] = new
            obj_try, grad_try = table.objective_and_gradient(x_try, lam)
            if obj_try >= obj - 1e-12:
                break
            step *= 0.5
            if step < beta * 2.0 ** -40:
                new, x_try, obj_try, grad_try = xC, x, obj, grad
                break

        dx = float(np.max(np.abs(new - xC))) if len(C) else 0.0
        prev_active = active.copy()
        active |= free & ((new == 0.0) | (new == 1.0))
        if cfg.release_rule == "inward":
            release = active & (((new == 0.0) & (gC > gbar)) | ((new == 1.0) & (gC < gbar)))
        else:
            release = active & (((new == 0.0) & (gC <= gbar)) | ((new == 1.0) & (gC >= gbar)))
        active &= ~release

        d_obj = obj_try - obj
        x, obj, grad = x_try, obj_try, grad_try
        trace.record(obj, float(x[C].sum()), int(active.sum()), dx)

        if dx < cfg.tol:
            trace.stop_reason = "converged"
            break
        if np.array_equal(active, prev_active) and abs(d_obj) < cfg.tol:
            trace.stop_reason = "stalled"
            break
    else:
        trace.stop_reason = "max_iters"

    if trace.max_decrease() > 1e-9:
        raise RuntimeError(f"objective decreased by {trace.max_decrease():.3g} during ascent")

    trace.x = x
    order = np.lexsort((C, x[C]))
    return frozenset(C[order[:L]].tolist()), trace
