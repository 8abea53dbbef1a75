"""
Reachable pairs on a small-world graph
======================================

How many vertex pairs sit within k hops, and how fast that grows with k.
"""

# %%
import numpy as np
import desmallworld as dsw

g = dsw.watts_strogatz(1000, 4, 0.1, seed=0)
print(g)

# %%
# every reachable pair is counted once from each end
for k in (2, 3, 4, 5):
    sizes = dsw.neighborhood_sizes(g, k)
    pairs = dsw.count_reachable_pairs(g, k)
    print(f"k={k}  |R_G|={pairs:7d}  mean N^k(v)={sizes.mean():7.2f}  check={sizes.sum() == 2 * pairs}")

# %%
# rewiring is what makes the world small: same edge count, far more pairs
for p in (0.0, 0.05, 0.2, 0.5):
    h = dsw.watts_strogatz(1000, 4, p, seed=0)
    print(f"p={p:<5} |E|={h.edge_count}  |R_G| at k=3: {dsw.count_reachable_pairs(h, 3)}")

# %%
# removing edges only ever shrinks R_G
rng = np.random.default_rng(1)
drop = rng.choice(g.edge_count, 50, replace=False)
print("random 50 edges cut", dsw.pairs_cut(g, 3, drop), "pairs")
