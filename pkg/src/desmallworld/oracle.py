"""Brute-force ground truth for small graphs."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, from_edges
from .reachability import check_k, count_reachable_pairs

__all__ = [
    "OracleResult",
    "exhaustive_optimum",
    "naive_paths",
    "ModularityWitness",
    "modularity_witness_search",
    "cut_function",
]

MAX_SUBSETS = 10**7
MAX_NAIVE_VERTICES = 12


@dataclass
class OracleResult:
    best_subset: frozenset
    best_cut: int
    evaluated: int


def exhaustive_optimum(g: Graph, k: int, L: int, limit: int = MAX_SUBSETS) -> OracleResult:
    """Try every L-subset of edges; keep the lexicographically first maximizer."""
    k = check_k(k)
    edges = g.active_edges()
    total = math.comb(len(edges), L)
    if total > limit:
        raise ValueError(f"C({len(edges)}, {L}) = {total} subsets exceeds the oracle limit {limit}")
    before = count_reachable_pairs(g, k)
    best, best_cut, n = None, -1, 0
    for subset in itertools.combinations(edges, L):
        n += 1
        cut = before - count_reachable_pairs(g.remove_edges(subset), k)
        if cut > best_cut:
            best, best_cut = subset, cut
    return OracleResult(frozenset(best or ()), max(best_cut, 0), n)


def naive_paths(g: Graph, u: int, v: int, k: int) -> list:
    """Every simple u-v path with at most ``k`` edges, as tuples of edge ids."""
    if g.vertex_count > MAX_NAIVE_VERTICES:
        raise ValueError(f"naive enumeration limited to {MAX_NAIVE_VERTICES} vertices")
    found = []

    def extend(path_vertices, path_edges):
        z = path_vertices[-1]
        if z == v and path_edges:
            found.append(tuple(path_edges))
            return
        if len(path_edges) >= k:
            return
        for w, e in g.adjacency[z]:
            if w not in path_vertices:
                extend(path_vertices + [w], path_edges + [e])

    if u != v:
        extend([u], [])
    return found


def cut_function(g: Graph, k: int):
    """``f(S)``: number of reachable pairs cut by removing edge set ``S``."""
    before = count_reachable_pairs(g, k)
    cache = {}

    def f(s):
        key = frozenset(s)
        if key not in cache:
            cache[key] = before - count_reachable_pairs(g.remove_edges(key), k) if key else 0
        return cache[key]

    return f


@dataclass
class ModularityWitness:
    graph: Graph
    A: frozenset
    B: frozenset
    f_A: int
    f_B: int
    f_union: int
    f_inter: int


def modularity_witness_search(trials: int = 10_000, rng_seed: int = 0, k: int = 2, max_vertices: int = 6):
    """Look for edge sets ``A``, ``B`` on random small graphs with

    * ``f(A) + f(B) < f(A | B) + f(A & B)``  (not submodular), and
    * ``f(A) + f(B) > f(A | B) + f(A & B)``  (not supermodular).

    Returns ``(submodularity_witness, supermodularity_witness)``; either is
    ``None`` if no instance turned up within ``trials`` random graphs.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(rng_seed)
    sub = sup = None
    for _ in range(trials):
        n = int(rng.integers(3, max_vertices + 1))
        all_pairs = list(itertools.combinations(range(n), 2))
        density = rng.uniform(0.3, 0.8)
        chosen = [p for p in all_pairs if rng.random() < density]
        if len(chosen) < 2:
            continue
        g = from_edges(chosen, vertex_count=n)
        f = cut_function(g, k)
        ids = list(range(g.edge_count))
        a_size = int(rng.integers(1, min(2, len(ids) - 1) + 1))
        perm = rng.permutation(ids)
        A = frozenset(int(e) for e in perm[:a_size])
        B = frozenset(int(e) for e in perm[a_size : a_size + int(rng.integers(1, 3))])
        if not B:
            continue
        fa, fb, fu, fi = f(A), f(B), f(A | B), f(A & B)
        w = ModularityWitness(g, A, B, fa, fb, fu, fi)
        if sub is None and fa + fb < fu + fi:
            sub = w
        if sup is None and fa + fb > fu + fi:
            sup = w
        if sub is not None and sup is not None:
            break
    return sub, sup
