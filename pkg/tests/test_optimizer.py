import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import A, B, C, D, E1, random_graph
from desmallworld import (OptimizerConfig, build_path_table, candidate_set, exhaustive_optimum,
                          from_edges, gradients, objective, optimize, pairs_cut,
                          reachable_pairs, watts_strogatz)
from desmallworld.reachability import cut_pairs


def test_objective_at_zero_is_pair_count(square):
    assert objective(square, 2, 1.0, np.zeros(4)) == pytest.approx(6.0)


def test_objective_square(square):
    assert objective(square, 2, 1.0, np.ones(4)) == pytest.approx(4 * np.exp(-1) + 2 * np.exp(-2))
    assert objective(square, 2, 1.0, np.ones(4)) == pytest.approx(1.742, abs=5e-4)


def test_objective_single_edge():
    g = from_edges([(0, 1)])
    assert objective(g, 2, 2.0, np.ones(1)) == pytest.approx(np.exp(-2))


def test_gradient_square(square):
    g = gradients(square, 2, 1.0, np.ones(4))
    assert g[E1] == pytest.approx(-(np.exp(-1) + 2 * np.exp(-2)))
    assert g[E1] == pytest.approx(-0.6386, abs=5e-5)


def test_gradient_zero_for_edge_outside_pairs():
    g = from_edges([(0, 1), (1, 2), (3, 4)])
    pairs = reachable_pairs(g.remove_edges([2]), 2)     # pairs of the path only
    assert gradients(g, 2, 1.0, np.ones(3), pairs)[2] == 0.0


def central_difference(table, x, lam, h=1e-5):
    out = np.zeros_like(x)
    for e in range(len(x)):
        hi, lo = x.copy(), x.copy()
        hi[e] += h
        lo[e] -= h
        out[e] = (table.objective(hi, lam) - table.objective(lo, lam)) / (2 * h)
    return out


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 10), st.sampled_from([0.5, 1.0, 2.0]), st.integers(2, 3), st.integers(0, 2**32 - 1))
def test_gradient_matches_finite_differences(n, lam, k, seed):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, n, 0.5)
    if g.edge_count == 0:
        return
    x = rng.uniform(0.05, 0.95, g.edge_count)    # keep x +- h inside the box
    table = build_path_table(g, k)
    _, grad = table.objective_and_gradient(x, lam)
    fd = central_difference(table, x, lam)
    assert np.all(grad <= 0)
    assert np.allclose(grad, fd, rtol=1e-6, atol=1e-8)


def test_star_optimum(star):
    chosen, trace = optimize(star, OptimizerConfig(k=2, L=1, lam=1.0, beta=0.1))
    assert len(chosen) == 1
    assert pairs_cut(star, 2, chosen) == 3 == exhaustive_optimum(star, 2, 1).best_cut


def test_bridge_found(bridged_triangles):
    chosen, _ = optimize(bridged_triangles, OptimizerConfig(k=2, L=1))
    assert chosen == {6}
    assert pairs_cut(bridged_triangles, 2, chosen) == exhaustive_optimum(bridged_triangles, 2, 1).best_cut


def test_square_any_edge(square):
    chosen, _ = optimize(square, OptimizerConfig(k=2, L=1))
    assert pairs_cut(square, 2, chosen) == 1


def check_trace(trace, cfg, C):
    assert trace.max_decrease() <= 1e-9
    assert np.all(trace.x >= 0) and np.all(trace.x <= 1)
    assert trace.stop_reason in ("converged", "stalled", "max_iters")
    assert len(trace.objective) == len(trace.sum_x) == len(trace.active_count) == len(trace.max_dx)


@pytest.mark.parametrize("mode", ["OMO", "OMW"])
@pytest.mark.parametrize("release_rule", ["inward", "literal"])
@pytest.mark.parametrize("normalize", [True, False])
def test_trace_properties(mode, release_rule, normalize):
    g = watts_strogatz(120, 4, 0.2, seed=3)
    cfg = OptimizerConfig(k=3, L=10, mode=mode, release_rule=release_rule, normalize_step=normalize)
    chosen, trace = optimize(g, cfg)
    assert len(chosen) == 10
    check_trace(trace, cfg, trace.candidates)
    if mode == "OMW":
        assert set(chosen) <= set(trace.candidates.tolist())


def test_deterministic():
    g = watts_strogatz(100, 4, 0.2, seed=9)
    cfg = OptimizerConfig(k=3, L=8, mode="OMW")
    a, ta = optimize(g, cfg)
    b, tb = optimize(g, cfg)
    assert a == b and ta.objective == tb.objective


def test_candidate_set_degenerate_equals_omo():
    g = watts_strogatz(40, 4, 0.2, seed=1)
    L = 8
    cand = candidate_set(g, 3, L, alpha=g.edge_count / L)
    assert len(cand.edges) == g.edge_count
    assert np.array_equal(cand.pairs.codes, reachable_pairs(g, 3).codes)
    omo, _ = optimize(g, OptimizerConfig(k=3, L=L, mode="OMO"))
    omw, _ = optimize(g, OptimizerConfig(k=3, L=L, mode="OMW", alpha=g.edge_count / L))
    assert omo == omw


def test_candidate_set_star(star):
    cand = candidate_set(star, 2, 1, alpha=3)
    assert cand.edges.tolist() == [0, 1, 2]
    assert cand.pairs.count == 6


def test_candidate_set_square(square):
    cand = candidate_set(square, 2, 1, alpha=2)
    assert len(cand.edges) == 2
    want = cut_pairs(square, 2, cand.edges.tolist())
    assert np.array_equal(cand.pairs.codes, want.codes)


def test_candidate_set_too_large(square):
    with pytest.raises(ValueError):
        candidate_set(square, 2, 3, alpha=2)


def test_pruned_graph_keeps_candidate_paths():
    g = watts_strogatz(150, 4, 0.2, seed=6)
    cand = candidate_set(g, 3, 5, alpha=3)
    pruned = cand.pruned(g)
    rebuilt = build_path_table(pruned, 3, cand.pairs)
    x = np.random.default_rng(2).random(g.edge_count)
    a = dict(zip(cand.table.pair_codes().tolist(), cand.table.p_sum(x)))
    b = dict(zip(rebuilt.pair_codes().tolist(), rebuilt.p_sum(x)))
    assert a.keys() == b.keys()
    assert all(abs(a[c] - b[c]) < 1e-12 for c in a)
    # every short path of an R_s pair crosses a candidate edge
    cand_edges = set(cand.edges.tolist())
    assert all(cand_edges & set(row.tolist()) for row in cand.table.path_edges)


def test_omw_cuts_only_candidate_pairs():
    g = watts_strogatz(150, 4, 0.2, seed=4)
    chosen, trace = optimize(g, OptimizerConfig(k=3, L=10, mode="OMW"))
    cut = cut_pairs(g, 3, chosen)
    assert np.all(np.isin(cut.codes, trace.pairs.codes))


def test_no_pairs_returns_budget_with_warning(caplog):
    # a single triangle edge cuts nothing: the detour has length 2
    tri = from_edges([(0, 1), (1, 2), (0, 2)])
    with caplog.at_level("WARNING"):
        chosen, trace = optimize(tri, OptimizerConfig(k=2, L=1, mode="OMW", alpha=1))
    assert len(chosen) == 1
    assert trace.pairs.count == 0
    assert "no pairs" in caplog.text


@pytest.mark.parametrize("cfg", [
    OptimizerConfig(k=2, L=4),
    OptimizerConfig(k=1, L=1),
    OptimizerConfig(k=2, L=1, lam=0),
    OptimizerConfig(k=2, L=1, beta=-1),
    OptimizerConfig(k=2, L=1, mode="XYZ"),
    OptimizerConfig(k=2, L=1, mode="OMW", alpha=0.5),
    OptimizerConfig(k=2, L=1, release_rule="other"),
])
def test_invalid_config(square, cfg):
    with pytest.raises(ValueError):
        optimize(square, cfg)


def test_trace_csv(tmp_path):
    g = watts_strogatz(60, 4, 0.2, seed=1)
    _, trace = optimize(g, OptimizerConfig(k=3, L=5))
    path = tmp_path / "trace.csv"
    trace.to_csv(path)
    lines = path.read_text().splitlines()
    assert lines[0] == "iteration,objective,sum_x,active_count,max_dx"
    assert len(lines) == trace.iterations + 2


def test_budget_caveat_recorded_not_asserted():
    g = watts_strogatz(100, 4, 0.2, seed=2)
    _, trace = optimize(g, OptimizerConfig(k=3, L=10))
    assert len(trace.sum_x) == trace.iterations + 1
    assert trace.sum_x[0] == g.edge_count
