import itertools

import networkx as nx
import numpy as np
import pytest

from desmallworld import from_edges

# square b-a-d-c-b with a=0, b=1, c=2, d=3 and edge ids e1..e4 -> 0..3
A, B, C, D = 0, 1, 2, 3
E1, E2, E3, E4 = 0, 1, 2, 3


@pytest.fixture
def square():
    g = from_edges([(B, A), (A, D), (B, C), (C, D)])
    assert g.edges[E1] == (A, B) and g.edges[E2] == (A, D)
    assert g.edges[E3] == (B, C) and g.edges[E4] == (C, D)
    return g


@pytest.fixture
def path3():
    return from_edges([(0, 1), (1, 2)])


@pytest.fixture
def path4():
    return from_edges([(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star():
    # centre 0, leaves 1..3
    return from_edges([(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def triangle():
    return from_edges([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def bridged_triangles():
    # triangles 0-1-2 and 3-4-5 joined by the bridge (2, 3), edge id 6
    return from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


def random_graph(rng, n, p):
    pairs = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return from_edges(pairs, vertex_count=n)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    for e in g.active_edges():
        h.add_edge(*g.edges[e], eid=e)
    return h


def nx_distances(g):
    return dict(nx.all_pairs_shortest_path_length(to_nx(g)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
