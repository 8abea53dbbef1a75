"""Undirected simple graphs with stable edge ids, SNAP edge-list I/O and
small-world generators (Watts-Strogatz ring, Kleinberg grid).

A :class:`Graph` is immutable.  Removing edges yields another ``Graph`` that
shares the edge table of its base and only masks adjacency, so edge ids stay
valid across every view derived from the same base graph.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

__all__ = [
    "Graph",
    "GeneratorConfig",
    "EdgeListError",
    "edge_subset",
    "from_edges",
    "load_edge_list",
    "read_edge_list",
    "write_edge_list",
    "remove_edges",
    "generate",
    "watts_strogatz",
    "kleinberg",
]


class EdgeListError(ValueError):
    """Raised for malformed or empty edge-list input."""


class Graph:
    """Undirected simple graph.

    ``edges[e]`` is the canonical ``(u, v)`` pair (``u < v``) of edge id ``e``.
    ``adjacency[v]`` is a tuple of ``(neighbor, edge_id)`` for the edges
    incident to ``v`` that are not masked by ``removed``.
    """

    __slots__ = ("vertex_count", "edges", "adjacency", "removed", "raw_edge_count")

    def __init__(self, vertex_count, edges, removed=frozenset(), raw_edge_count=None, _adjacency=None):
        self.vertex_count = int(vertex_count)
        self.edges = tuple(edges)
        self.removed = frozenset(removed)
        # number of data lines / arcs seen before symmetrization and dedup
        self.raw_edge_count = len(self.edges) if raw_edge_count is None else raw_edge_count
        if _adjacency is None:
            adj = [[] for _ in range(self.vertex_count)]
            for e, (u, v) in enumerate(self.edges):
                if e in self.removed:
                    continue
                adj[u].append((v, e))
                adj[v].append((u, e))
            _adjacency = tuple(tuple(a) for a in adj)
        self.adjacency = _adjacency

    @property
    def edge_count(self) -> int:
        """Size of the edge-id space (masked edges included)."""
        return len(self.edges)

    @property
    def active_edge_count(self) -> int:
        return len(self.edges) - len(self.removed)

    def active_edges(self) -> list[int]:
        return [e for e in range(len(self.edges)) if e not in self.removed]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_id(self, u: int, v: int) -> int:
        """Id of edge ``{u, v}``; raises KeyError if absent (or masked)."""
        for w, e in self.adjacency[u]:
            if w == v:
                return e
        raise KeyError((u, v))

    def remove_edges(self, ids: Iterable[int]) -> "Graph":
        return remove_edges(self, ids)

    def base(self) -> "Graph":
        if not self.removed:
            return self
        return Graph(self.vertex_count, self.edges, raw_edge_count=self.raw_edge_count)

    def __repr__(self):
        return (f"Graph(|V|={self.vertex_count}, |E|={self.edge_count}, "
                f"removed={len(self.removed)})")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertex_count == other.vertex_count and self.edges == other.edges
                and self.removed == other.removed)

    def __hash__(self):
        return hash((self.vertex_count, self.edges, self.removed))

    def __getstate__(self):
        return (self.vertex_count, self.edges, self.removed, self.raw_edge_count)

    def __setstate__(self, state):
        Graph.__init__(self, *state)


def edge_subset(g: Graph, ids: Iterable[int]) -> frozenset:
    """Validate edge ids against ``g`` and return them as a frozenset."""
    out = frozenset(int(e) for e in ids)
    m = g.edge_count
    bad = sorted(e for e in out if e < 0 or e >= m)
    if bad:
        raise ValueError(f"invalid edge id(s) {bad[:5]} for graph with {m} edges")
    return out


def from_edges(pairs: Iterable[tuple[int, int]], vertex_count: int | None = None) -> Graph:
    """Build a graph from vertex pairs, keeping ids as given.

    Self-loops are dropped and duplicates merged; edge ids follow first
    appearance.
    """
    seen = {}
    top = -1
    raw = 0
    for u, v in pairs:
        u, v = int(u), int(v)
        raw += 1
        if u < 0 or v < 0:
            raise ValueError(f"negative vertex id in ({u}, {v})")
        top = max(top, u, v)
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen[key] = len(seen)
    n = top + 1 if vertex_count is None else int(vertex_count)
    if n <= top:
        raise ValueError(f"vertex_count={n} too small for vertex id {top}")
    return Graph(n, list(seen), raw_edge_count=raw)


def load_edge_list(stream: TextIO | str, directed: bool = True) -> Graph:
    """Parse a SNAP-style edge list.

    Lines starting with ``#`` and blank lines are skipped; each data line holds
    two integer vertex ids.  Input arcs are symmetrized regardless of
    ``directed`` (which only affects how ``raw_edge_count`` is interpreted:
    the number of data lines either way).  Vertex ids are compacted to
    ``[0, |V|)`` in first-appearance order.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    ids: dict[int, int] = {}
    pairs = []
    for lineno, line in enumerate(stream, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        tok = s.split()
        if len(tok) < 2:
            raise EdgeListError(f"line {lineno}: expected two vertex ids, got {s!r}")
        try:
            a, b = int(tok[0]), int(tok[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer vertex id in {s!r}") from None
        u = ids.setdefault(a, len(ids))
        v = ids.setdefault(b, len(ids))
        pairs.append((u, v))
    if not pairs:
        raise EdgeListError("edge list contains no edges")
    g = from_edges(pairs, vertex_count=len(ids))
    if g.edge_count == 0:
        raise EdgeListError("edge list contains only self-loops")
    return g


def read_edge_list(path, directed: bool = True) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_edge_list(fh, directed=directed)


def write_edge_list(g: Graph, stream: TextIO, comment: str | None = None) -> None:
    """Write the non-masked edges of ``g``, one ``u v`` per line."""
    if comment:
        for line in comment.splitlines():
            stream.write(f"# {line}\n")
    for e in g.active_edges():
        u, v = g.edges[e]
        stream.write(f"{u} {v}\n")


def remove_edges(g: Graph, ids: Iterable[int]) -> Graph:
    """Return a view of ``g`` with edges ``ids`` masked.  ``g`` is untouched."""
    s = edge_subset(g, ids)
    if not s:
        return g
    removed = g.removed | s
    adj = tuple(
        tuple((w, e) for w, e in nbrs if e not in s)
        for nbrs in g.adjacency
    )
    return Graph(g.vertex_count, g.edges, removed=removed,
                 raw_edge_count=g.raw_edge_count, _adjacency=adj)


# ---------------------------------------------------------------------------
# generators

@dataclass(frozen=True)
class GeneratorConfig:
    model: str = "ws"
    n: int = 1000
    ws_base_degree: int = 4
    ws_rewire_prob: float = 0.1
    ks_long_range_exponent: float = 2.0
    ks_long_range_edges_per_vertex: int = 1
    rng_seed: int = 0

    def validate(self):
        model = self.model.lower()
        if model not in ("ws", "ks"):
            raise ValueError(f"unknown generator model {self.model!r}")
        if model == "ws":
            K = self.ws_base_degree
            if K <= 0 or K % 2:
                raise ValueError("ws_base_degree must be an even positive integer")
            if self.n <= K:
                raise ValueError(f"n={self.n} too small for base degree {K}")
            if not 0.0 <= self.ws_rewire_prob <= 1.0:
                raise ValueError("ws_rewire_prob must be in [0, 1]")
        else:
            if self.n < 2:
                raise ValueError("grid side must be at least 2")
            if self.ks_long_range_exponent < 0:
                raise ValueError("ks_long_range_exponent must be nonnegative")
            if self.ks_long_range_edges_per_vertex < 0:
                raise ValueError("ks_long_range_edges_per_vertex must be nonnegative")


def generate(config: GeneratorConfig) -> Graph:
    config.validate()
    if config.model.lower() == "ws":
        return watts_strogatz(config.n, config.ws_base_degree, config.ws_rewire_prob, config.rng_seed)
    return kleinberg(config.n, config.ks_long_range_exponent,
                     config.ks_long_range_edges_per_vertex, config.rng_seed)


def watts_strogatz(n: int, base_degree: int = 4, p: float = 0.1, seed: int = 0) -> Graph:
    """Ring lattice on ``n`` vertices, each joined to ``base_degree/2``
    neighbours per side, with every lattice edge's far endpoint rewired with
    probability ``p`` to a uniform vertex (no loops, no duplicates)."""
    GeneratorConfig("ws", n, base_degree, p, rng_seed=seed).validate()
    rng = np.random.default_rng(seed)
    half = base_degree // 2
    nbrs = [set() for _ in range(n)]
    for u in range(n):
        for j in range(1, half + 1):
            v = (u + j) % n
            nbrs[u].add(v)
            nbrs[v].add(u)
    # same sweep order as the classic construction: by offset, then vertex
    for j in range(1, half + 1):
        for u in range(n):
            if rng.random() >= p:
                continue
            v = (u + j) % n
            if v not in nbrs[u] or len(nbrs[u]) >= n - 1:
                continue
            w = int(rng.integers(n))
            while w == u or w in nbrs[u]:
                w = int(rng.integers(n))
            nbrs[u].discard(v)
            nbrs[v].discard(u)
            nbrs[u].add(w)
            nbrs[w].add(u)
    pairs = sorted((u, v) for u in range(n) for v in nbrs[u] if u < v)
    return Graph(n, pairs)


def kleinberg(side: int, exponent: float = 2.0, long_range: int = 1, seed: int = 0) -> Graph:
    """``side x side`` grid (no wraparound) plus ``long_range`` shortcuts per
    vertex whose targets are drawn with probability proportional to
    ``manhattan_distance ** -exponent``.  Shortcuts duplicating an existing
    edge are merged."""
    GeneratorConfig("ks", side, ks_long_range_exponent=exponent,
                    ks_long_range_edges_per_vertex=long_range, rng_seed=seed).validate()
    rng = np.random.default_rng(seed)
    n = side * side
    pairs = []
    for r in range(side):
        for c in range(side):
            v = r * side + c
            if c + 1 < side:
                pairs.append((v, v + 1))
            if r + 1 < side:
                pairs.append((v, v + side))
    if long_range:
        rows, cols = np.divmod(np.arange(n), side)
        for v in range(n):
            d = np.abs(rows - rows[v]) + np.abs(cols - cols[v])
            w = np.zeros(n)
            mask = d > 0
            w[mask] = d[mask].astype(float) ** (-exponent)
            w /= w.sum()
            for t in rng.choice(n, size=long_range, p=w):
                pairs.append((v, int(t)))
    return from_edges(pairs, vertex_count=n)
