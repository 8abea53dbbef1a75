"""
Three ways to rank edges
========================

Global betweenness, its k-hop local version, and short betweenness (the
share of all simple paths of length <= k that use an edge).
"""

# %%
import numpy as np
import desmallworld as dsw

g = dsw.kleinberg(20, 2.0, 1, seed=3)
k = 3
bt = dsw.global_betweenness(g).score
lb = dsw.local_betweenness(g, k).score
sb = dsw.short_betweenness(g, k).score

# %%
# the scores agree on the broad picture but not on the top of the list
print("corr(BT, LB) =", np.corrcoef(bt, lb)[0, 1].round(3))
print("corr(LB, SB) =", np.corrcoef(lb, sb)[0, 1].round(3))
top = {name: set(dsw.top_edges(s, 40)) for name, s in [("BT", bt), ("LB", lb), ("SB", sb)]}
print("top-40 overlap LB/SB:", len(top["LB"] & top["SB"]), " BT/SB:", len(top["BT"] & top["SB"]))

# %%
# what each ranking buys when its top L edges are removed in one pass
L = 40
for name in ("BT", "LB", "SB"):
    cut = dsw.pairs_cut(g, k, top[name])
    print(f"{name}: {cut} pairs cut, delta={cut / L:.2f}")

# %%
# rescoring after every removal (batch r=1) usually helps a little
for r in (L, 10, 1):
    chosen = dsw.select_greedy(g, dsw.SelectionConfig("SB", L, r, k))
    print(f"SB with batch r={r:2d}: {dsw.pairs_cut(g, k, chosen)} pairs cut")
