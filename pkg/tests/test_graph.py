import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from desmallworld import (GeneratorConfig, from_edges, generate, kleinberg, load_edge_list,
                          remove_edges, watts_strogatz, write_edge_list)
from desmallworld.graph import EdgeListError


def adjacency_sets(g):
    return [sorted(a) for a in g.adjacency]


def test_load_two_edge_path():
    g = load_edge_list("0 1\n1 2")
    assert (g.vertex_count, g.edge_count) == (3, 2)


def test_load_dedup_and_loops():
    g = load_edge_list("# c\n0 1\n1 0\n0 0")
    assert (g.vertex_count, g.edge_count) == (2, 1)
    assert g.raw_edge_count == 3


def test_load_compacts_ids_in_first_appearance_order():
    g = load_edge_list("10 7\n7 300\n# x\n\n300 10\n")
    assert g.vertex_count == 3
    assert g.edges == ((0, 1), (1, 2), (0, 2))


def test_load_tabs_and_extra_columns():
    g = load_edge_list("5\t6\t1.0\n6\t7\n")
    assert g.edge_count == 2


@pytest.mark.parametrize("text, line", [("0 1\n1 x\n", 2), ("0 1\n# ok\n3\n", 3)])
def test_load_malformed_reports_line(text, line):
    with pytest.raises(EdgeListError, match=f"line {line}"):
        load_edge_list(text)


@pytest.mark.parametrize("text", ["", "# only comments\n", "4 4\n"])
def test_load_empty_graph_rejected(text):
    with pytest.raises(EdgeListError):
        load_edge_list(text)


def test_adjacency_symmetric_and_ids_dense():
    g = watts_strogatz(50, 4, 0.3, seed=3)
    seen = set()
    for u, nbrs in enumerate(g.adjacency):
        for v, e in nbrs:
            assert (u, e) in {(w, f) for w, f in g.adjacency[v]}
            assert g.edges[e] == (min(u, v), max(u, v))
            seen.add(e)
    assert seen == set(range(g.edge_count))


def test_ws_zero_rewiring_is_cycle():
    g = generate(GeneratorConfig("ws", n=10, ws_base_degree=2, ws_rewire_prob=0.0))
    assert g.edge_count == 10
    assert all(g.degree(v) == 2 for v in range(10))


@pytest.mark.parametrize("n, K", [(20, 4), (31, 6), (100, 8)])
def test_ws_edge_count_without_rewiring(n, K):
    assert watts_strogatz(n, K, 0.0).edge_count == n * K // 2


def test_ws_rewiring_keeps_edge_count_and_simplicity():
    g = watts_strogatz(200, 4, 0.5, seed=9)
    assert g.edge_count == 400
    assert len(set(g.edges)) == 400
    assert all(u < v for u, v in g.edges)


def test_ks_pure_lattice():
    g = generate(GeneratorConfig("ks", n=3, ks_long_range_exponent=2, ks_long_range_edges_per_vertex=0))
    assert (g.vertex_count, g.edge_count) == (9, 12)


def test_ks_long_range_edges_added():
    g = kleinberg(10, 2.0, 1, seed=4)
    assert g.vertex_count == 100
    assert 180 < g.edge_count <= 180 + 100


@pytest.mark.parametrize("model, n", [("ws", 1000), ("ks", 20)])
def test_generators_deterministic(model, n):
    cfg = GeneratorConfig(model, n, rng_seed=42)
    assert generate(cfg).edges == generate(cfg).edges
    other = GeneratorConfig(model, n, rng_seed=43)
    assert generate(cfg).edges != generate(other).edges


@pytest.mark.parametrize("cfg", [
    GeneratorConfig("ws", n=4, ws_base_degree=4),
    GeneratorConfig("ws", n=10, ws_base_degree=3),
    GeneratorConfig("ws", n=10, ws_rewire_prob=1.5),
    GeneratorConfig("ks", n=1),
    GeneratorConfig("er", n=10),
])
def test_generator_rejects_bad_config(cfg):
    with pytest.raises(ValueError):
        generate(cfg)


def test_remove_edges_masks_adjacency(path3):
    view = remove_edges(path3, {path3.edge_id(0, 1)})
    assert view.adjacency[0] == ()
    assert path3.adjacency[0] == ((1, 0),)   # original untouched
    assert view.edge_count == path3.edge_count


def test_remove_nothing_is_identity(path3):
    assert remove_edges(path3, set()) == path3


def test_remove_all_isolates(square):
    view = square.remove_edges(range(square.edge_count))
    assert all(view.degree(v) == 0 for v in range(4))


def test_remove_invalid_id(square):
    with pytest.raises(ValueError):
        square.remove_edges([4])
    with pytest.raises(ValueError):
        square.remove_edges([-1])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.data())
def test_remove_composes(seed, data):
    g = watts_strogatz(30, 4, 0.2, seed=seed)
    ids = list(range(g.edge_count))
    a = set(data.draw(st.lists(st.sampled_from(ids), max_size=10)))
    b = set(data.draw(st.lists(st.sampled_from(ids), max_size=10))) - a
    once = g.remove_edges(a | b)
    twice = g.remove_edges(a).remove_edges(b)
    assert adjacency_sets(once) == adjacency_sets(twice)
    assert once.removed == twice.removed


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 15), st.integers(0, 15)), min_size=1, max_size=40))
def test_edge_list_round_trip(pairs):
    pairs = [(u, v) for u, v in pairs if u != v]
    if not pairs:
        return
    g = load_edge_list("\n".join(f"{u} {v}" for u, v in pairs))
    buf = io.StringIO()
    write_edge_list(g, buf, comment="round trip")
    h = load_edge_list(buf.getvalue())
    assert h.edges == g.edges
    assert h.vertex_count == g.vertex_count


def test_from_edges_keeps_isolated_vertices():
    g = from_edges([(0, 1)], vertex_count=5)
    assert g.vertex_count == 5 and g.degree(4) == 0


def test_graph_pickles():
    import pickle
    g = watts_strogatz(20, 4, 0.2, seed=1).remove_edges([0, 3])
    h = pickle.loads(pickle.dumps(g))
    assert h == g and h.adjacency == g.adjacency
