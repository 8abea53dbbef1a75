"""Edge removal for slowing local spread on small-world networks.

Select ``L`` edges whose removal cuts the most vertex pairs within distance
``k``: betweenness baselines, short betweenness and a relaxed gradient
optimizer over short-path sums, plus brute-force oracles for small graphs.
"""
from .betweenness import (EdgeScores, global_betweenness, gradient_lower_bound_check,
                          local_betweenness, short_betweenness, top_edges)
from .graph import (EdgeListError, GeneratorConfig, Graph, edge_subset, from_edges, generate,
                    kleinberg, load_edge_list, read_edge_list, remove_edges, watts_strogatz,
                    write_edge_list)
from .greedy import SelectionConfig, select_greedy
from .harness import RunReport, compare, run
from .optimizer import (CandidateSet, OptimizerConfig, OptimizerTrace, candidate_set, gradients,
                        objective, optimize)
from .oracle import exhaustive_optimum, modularity_witness_search, naive_paths
from .paths import PathTable, build_path_table, compute_puve, path_algebra, path_counts
from .reachability import (ReachablePairSet, count_reachable_pairs, neighborhood_sizes,
                           pairs_cut, reachable_pairs)

__version__ = "0.1.0"
