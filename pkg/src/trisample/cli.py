"""Command-line front end: graph generation, stream building, exact counts
and estimator experiments."""

from __future__ import annotations

import argparse
import sys

from .generators import BaConfig, ba_graph, er_graph, graph_stats
from .graph import Graph, read_edge_list, write_edge_list
from .harness import (
    EstimatorSpec,
    ExperimentConfig,
    MetricsReport,
    emit_csv,
    run_experiment,
    trace_path_for,
)
from .seeding import derive_seed
from .stream import (
    StreamSpec,
    read_snapshot_dir,
    read_stream_file,
    write_stream_file,
)


def cmd_generate(args) -> int:
    if args.kind == "er":
        g = er_graph(args.nodes, args.edge_prob, args.seed)
    else:
        cfg = BaConfig(
            n_total=args.nodes,
            seed_nodes=args.seed_nodes,
            seed_edge_prob=args.seed_edge_prob,
            edges_per_new_node=args.edges_per_node,
            gamma=args.gamma,
            seed=args.seed,
        )
        g = ba_graph(cfg)
    write_edge_list(g, args.out)
    print(f"wrote {args.out}: nodes={g.node_count} edges={g.edge_count}")
    return 0


def cmd_stream(args) -> int:
    if args.snapshots:
        spec = StreamSpec("snapshot-diff", snapshots=read_snapshot_dir(args.snapshots))
    else:
        if not args.edges:
            raise ValueError("either --edges or --snapshots is required")
        edges = read_edge_list(args.edges)
        if args.pe > 0.0:
            kind = "node-deletion" if args.node_del else "edge-deletion"
            spec = StreamSpec(kind, edges=edges, p_e=args.pe, p_d=args.pd)
        else:
            spec = StreamSpec("permutation", edges=edges)
    events = spec.realize(args.seed)
    write_stream_file(events, args.out)
    adds = sum(1 for ev in events if ev.beta == 1)
    print(f"wrote {args.out}: events={len(events)} additions={adds} deletions={len(events) - adds}")
    return 0


def cmd_exact(args) -> int:
    if bool(args.edges) == bool(args.stream):
        raise ValueError("exactly one of --edges or --stream is required")
    if args.edges:
        g = Graph.from_edges(read_edge_list(args.edges))
    else:
        g = Graph()
        for ev in read_stream_file(args.stream):
            if ev.beta == 1:
                if not g.add_edge(ev.u, ev.v):
                    raise ValueError(f"stream adds present edge ({ev.u}, {ev.v})")
            elif not g.delete_edge(ev.u, ev.v):
                raise ValueError(f"stream deletes absent edge ({ev.u}, {ev.v})")
    stats = graph_stats(g)
    print(
        f"nodes={stats.nodes} edges={stats.edges} "
        f"triangles={stats.triangles} clustering={stats.clustering:.6g}"
    )
    return 0


def _stream_spec_from_args(args) -> StreamSpec:
    if args.stream:
        return StreamSpec("file", path=args.stream)
    if not args.edges:
        raise ValueError("either --edges or --stream is required")
    edges = read_edge_list(args.edges)
    if args.pe > 0.0:
        kind = "node-deletion" if args.node_del else "edge-deletion"
        return StreamSpec(kind, edges=edges, p_e=args.pe, p_d=args.pd)
    return StreamSpec("permutation", edges=edges)


def _print_report(report) -> None:
    for row in report.rows:
        print(
            f"{row.name:>8}  param={row.param:<8g} mean={row.mean:<12.6g} "
            f"rel_err={row.rel_err:<+10.4g} nrmse={row.nrmse:<10.4g} "
            f"samples={row.edges_sampled_mean:.1f}"
        )


def cmd_run(args) -> int:
    estimators = []
    if args.alpha is not None:
        estimators.append(EstimatorSpec("esd", args.alpha))
    if args.p is not None:
        estimators.append(EstimatorSpec("doulion", args.p))
    if args.reservoir is not None:
        estimators.append(EstimatorSpec("triest", args.reservoir))
    cfg = ExperimentConfig(
        stream=_stream_spec_from_args(args),
        estimators=estimators,
        replications=args.reps,
        seed=args.seed,
        trace_stride=args.stride,
        timing=args.timing,
    )
    report, traces = run_experiment(cfg)
    emit_csv(report, traces, args.out)
    print(f"truth={report.truth:g}  ({args.out}, {trace_path_for(args.out)})")
    _print_report(report)
    return 0


def cmd_compare(args) -> int:
    edges = read_edge_list(args.edges)
    fractions = [float(tok) for tok in args.sizes.split(",") if tok]
    if not fractions:
        raise ValueError("--sizes must list at least one fraction")
    all_rows = []
    truth = 0.0
    for i, frac in enumerate(fractions):
        if not 0.0 < frac <= 1.0:
            raise ValueError(f"sample fraction must be in (0, 1], got {frac}")
        capacity = max(1, round(frac * len(edges)))
        cfg = ExperimentConfig(
            stream=StreamSpec("permutation", edges=edges),
            estimators=[
                EstimatorSpec("esd", frac),
                EstimatorSpec("doulion", frac),
                EstimatorSpec("triest", capacity),
            ],
            replications=args.reps,
            seed=derive_seed(args.seed, "size", i),
            trace_stride=args.stride,
        )
        report, _ = run_experiment(cfg)
        all_rows.extend(report.rows)
        truth = report.truth
        print(f"-- sample fraction {frac:g} (reservoir {capacity})")
        _print_report(report)
    emit_csv(MetricsReport(rows=all_rows, truth=truth), [], args.out)
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisample",
        description="Streaming triangle estimation on dynamic graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate an ER or BA graph edge list")
    gen.add_argument("kind", choices=["er", "ba"])
    gen.add_argument("--nodes", type=int, required=True)
    gen.add_argument("--edge-prob", type=float, default=0.1, help="ER edge probability")
    gen.add_argument("--seed-nodes", type=int, default=100, help="BA: ER seed size")
    gen.add_argument("--seed-edge-prob", type=float, default=0.1, help="BA: ER seed edge probability")
    gen.add_argument("--edges-per-node", type=int, default=10, help="BA: edges attached per new node")
    gen.add_argument("--gamma", type=float, default=1.0, help="BA: preferential attachment power")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_generate)

    st = sub.add_parser("stream", help="build an event stream file from an edge list")
    st.add_argument("--edges", help="input edge-list file")
    st.add_argument("--snapshots", help="directory of snapshot edge lists (lexicographic order)")
    st.add_argument("--pe", type=float, default=0.0, help="deletion-event probability per addition")
    st.add_argument("--pd", type=float, default=0.0, help="per-edge (or per-node) deletion probability")
    st.add_argument("--node-del", action="store_true", help="delete nodes instead of edges")
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--out", required=True)
    st.set_defaults(func=cmd_stream)

    ex = sub.add_parser("exact", help="exact triangle count of a graph or replayed stream")
    ex.add_argument("--edges")
    ex.add_argument("--stream")
    ex.set_defaults(func=cmd_exact)

    run = sub.add_parser("run", help="run a replicated estimation experiment")
    run.add_argument("--edges", help="edge list to stream (see --pe/--pd/--node-del)")
    run.add_argument("--stream", help="pre-built stream file (fixed across replications)")
    run.add_argument("--pe", type=float, default=0.0)
    run.add_argument("--pd", type=float, default=0.0)
    run.add_argument("--node-del", action="store_true")
    run.add_argument("--alpha", type=float, help="enable the sampling estimator with this fraction")
    run.add_argument("--p", type=float, help="enable the sparsifier baseline with this probability")
    run.add_argument("--reservoir", type=int, help="enable the reservoir baseline with this capacity")
    run.add_argument("--reps", type=int, default=100)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--stride", type=int, help="events between trace points")
    run.add_argument("--timing", action="store_true", help="measure per-estimator wall time (breaks byte-identical output)")
    run.add_argument("--out", required=True)
    run.set_defaults(func=cmd_run)

    cmp_ = sub.add_parser("compare", help="sweep the three estimators over sample-size fractions")
    cmp_.add_argument("--edges", required=True)
    cmp_.add_argument("--sizes", default="0.005,0.01,0.02,0.05", help="comma-separated edge fractions")
    cmp_.add_argument("--reps", type=int, default=100)
    cmp_.add_argument("--seed", type=int, default=0)
    cmp_.add_argument("--stride", type=int)
    cmp_.add_argument("--out", required=True)
    cmp_.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
