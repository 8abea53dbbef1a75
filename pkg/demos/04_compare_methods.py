"""
Comparing edge-removal methods
==============================

Run every method on one graph and compare delta, the pairs cut per removed
edge.  Also shows the optimizer's trace and what the candidate set keeps.
"""

# %%
import desmallworld as dsw

g = dsw.watts_strogatz(1000, 4, 0.1, seed=0)
k, L = 3, 100
reports, ranking = dsw.compare(g, ["bt", "lb", "sb", "omo", "omw"], k, L)
for rep in reports:
    print(f"{rep.method:4s} delta={rep.delta:6.2f}  iterations={rep.iterations:3d}  {rep.runtime_ms:8.1f} ms")
print("ranking:", " > ".join(ranking))

# %%
# the optimizer's objective never drops between iterations
omw = next(rep for rep in reports if rep.method == "omw")
tr = omw.trace
print("OMW stopped:", tr.stop_reason, "after", tr.iterations, "iterations")
print("objective first/last:", round(tr.objective[0], 2), round(tr.objective[-1], 2))
print("largest drop:", tr.max_decrease())

# %%
# the candidate set: alpha*L edges by SB and the pairs they could cut
cand = dsw.candidate_set(g, k, L, alpha=5.0)
print(f"|E_s|={len(cand.edges)}  |R_s|={len(cand.pairs)} of {dsw.count_reachable_pairs(g, k)}"
      f"  |E_P|={len(cand.path_edges)}")

# %%
# on a tiny graph the brute-force optimum shows how close the heuristics get
small = dsw.watts_strogatz(10, 4, 0.3, seed=2)
best = dsw.exhaustive_optimum(small, 2, 2)
print("optimum cuts", best.best_cut, "with", sorted(small.edges[e] for e in best.best_subset))
for m in ("sb", "omo"):
    print(m, dsw.run(small, m, 2, 2).pairs_cut)
