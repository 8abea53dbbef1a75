"""Command-line entry point: ``desmallworld --graph FILE --k 3 --budget 100 --method sb``."""
from __future__ import annotations

import argparse
import logging
import sys

from .graph import EdgeListError, GeneratorConfig, generate, read_edge_list
from .harness import METHODS, compare, run, write_removed_edges, write_reports


def build_parser():
    p = argparse.ArgumentParser(
        prog="desmallworld",
        description="Choose edges whose removal cuts the most vertex pairs within distance k.",
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="PATH", help="SNAP-style edge list")
    src.add_argument("--generate", choices=["ws", "ks"], help="synthetic small-world model")
    p.add_argument("--n", type=int, default=1000,
                   help="vertex count (ws) or grid side (ks) [%(default)s]")
    p.add_argument("--ws-degree", type=int, default=4)
    p.add_argument("--ws-p", type=float, default=0.1)
    p.add_argument("--ks-exponent", type=float, default=2.0)
    p.add_argument("--ks-long-range", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)

    p.add_argument("--k", type=int, required=True, help="spreading parameter (>= 2)")
    p.add_argument("--budget", type=int, required=True, help="number of edges to remove (L)")
    p.add_argument("--method", choices=METHODS, default="sb")
    p.add_argument("--compare", metavar="M1,M2,...",
                   help="run several methods on the same instance instead of --method")
    p.add_argument("--batch", type=int, default=None,
                   help="greedy batch size r (default: L for bt/lb/sb, 1 for greedy-*)")
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=0.05)
    p.add_argument("--alpha", type=float, default=5.0)
    p.add_argument("--max-iters", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--raw-step", action="store_true",
                   help="use beta as a plain step size instead of the largest first-step change")
    p.add_argument("--release-rule", choices=["inward", "literal"], default="inward")
    p.add_argument("--threads", type=int, default=1, help="worker processes for per-source work")
    p.add_argument("--out", metavar="PATH", help="CSV report")
    p.add_argument("--edges-out", metavar="PATH", help="removed edges, one 'u v' per line")
    p.add_argument("--trace-out", metavar="PATH", help="optimizer trace CSV (omo/omw only)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.graph:
            g = read_edge_list(args.graph)
        else:
            g = generate(GeneratorConfig(args.generate, args.n, args.ws_degree, args.ws_p,
                                         args.ks_exponent, args.ks_long_range, args.seed))
        opts = dict(r=args.batch, lam=args.lam, beta=args.beta, alpha=args.alpha,
                    max_iters=args.max_iters, tol=args.tol,
                    normalize_step=not args.raw_step, release_rule=args.release_rule)
        if args.compare:
            methods = [m.strip().lower() for m in args.compare.split(",") if m.strip()]
            unknown = [m for m in methods if m not in METHODS]
            if unknown:
                raise ValueError(f"unknown method(s) {', '.join(unknown)}")
            reports, ranking = compare(g, methods, args.k, args.budget, workers=args.threads, **opts)
        else:
            reports = [run(g, args.method, args.k, args.budget, workers=args.threads, **opts)]
            ranking = None
    except (ValueError, OSError, EdgeListError) as exc:
        print(f"desmallworld: error: {exc}", file=sys.stderr)
        return 2

    print(f"graph: |V|={g.vertex_count} |E|={g.active_edge_count} (raw lines/arcs: {g.raw_edge_count})")
    for rep in reports:
        print(f"{rep.method:>10}  pairs_before={rep.pairs_before}  pairs_after={rep.pairs_after}  "
              f"cut={rep.pairs_cut}  delta={rep.delta:.3f}  time={rep.runtime_ms:.0f}ms")
    if ranking:
        print("ranking: " + " > ".join(ranking))
    if args.out:
        write_reports(reports, args.out)
    if args.edges_out:
        write_removed_edges(reports[0], args.edges_out)
    if args.trace_out:
        traced = [rep for rep in reports if rep.trace is not None]
        if traced:
            traced[0].trace.to_csv(args.trace_out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
