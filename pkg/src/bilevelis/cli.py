"""Command-line interface.

Exit codes: 0 success, 1 infeasible instance, 2 invalid input or
parameters, 3 brute-force cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bis_solvers import (
    solve_cb_db_o,
    solve_cs_db_o_bipartite,
    solve_cs_db_p_bipartite,
    solve_enum_leader,
    verify_certificate,
)
from .brute import brute_bisel, brute_follower, brute_force
from .core import BisGraph, IntervalInstance, Setting, Variant, make_outcome
from .errors import CapExceeded, Infeasible, SolverError
from .follower import react
from .interval_dp import solve_bisel
from .randgen import bench_dp, gen_random_graph, gen_random_intervals
from .reductions import (
    b2cnf_to_bis,
    is_to_bis,
    planar_vc_to_bipartite_bis,
    vc_to_bipartite_bis,
    vc_to_bis,
)
from .serialize import (
    b2cnf_from_dict,
    dumps,
    graph_to_dict,
    instance_from_dict,
    intervals_to_dict,
    load,
    outcome_to_dict,
    save,
)
from .single_level import is_bipartite

_SETTINGS = {"o": Setting.OPTIMISTIC, "p": Setting.PESSIMISTIC}


def _emit(data: dict, output: str | None) -> None:
    text = dumps(data)
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str) -> BisGraph:
    instance = instance_from_dict(load(path))
    if not isinstance(instance, BisGraph):
        raise ValueError("expected a graph instance file")
    return instance


def _load_intervals(path: str) -> IntervalInstance:
    instance = instance_from_dict(load(path))
    if not isinstance(instance, IntervalInstance):
        raise ValueError("expected an interval instance file")
    return instance


def _parse_ids(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(part) for part in text.split(","))


def _cmd_solve(args) -> int:
    graph = _load_graph(args.input)
    variant = Variant.from_code(args.variant)
    if variant.code == "cb-db-o":
        outcome = solve_cb_db_o(graph)
    elif variant.code == "cs-db-o" and is_bipartite(graph):
        outcome = solve_cs_db_o_bipartite(graph)
    elif variant.code == "cs-db-p" and is_bipartite(graph):
        outcome = solve_cs_db_p_bipartite(graph)
    else:
        outcome = solve_enum_leader(graph, variant)
    _emit(outcome_to_dict(outcome), args.output)
    return 0


def _cmd_solve_intervals(args) -> int:
    instance = _load_intervals(args.input)
    outcome = solve_bisel(instance, _SETTINGS[args.setting])
    _emit(outcome_to_dict(outcome), args.output)
    return 0


def _cmd_follower(args) -> int:
    instance = instance_from_dict(load(args.input))
    variant = Variant.from_code(args.variant)
    leader_set = _parse_ids(args.leader)
    reaction = react(instance, leader_set, variant)
    outcome = make_outcome(instance, variant, leader_set, reaction)
    _emit(outcome_to_dict(outcome), args.output)
    return 0


def _cmd_brute(args) -> int:
    graph = _load_graph(args.input)
    variant = Variant.from_code(args.variant)
    if args.leader is not None:
        reaction = brute_follower(
            graph, _parse_ids(args.leader), variant, cap=args.cap
        )
        outcome = make_outcome(graph, variant, _parse_ids(args.leader), reaction)
    else:
        outcome = brute_force(graph, variant, cap=args.cap)
    _emit(outcome_to_dict(outcome), args.output)
    return 0


def _cmd_brute_intervals(args) -> int:
    instance = _load_intervals(args.input)
    outcome = brute_bisel(instance, _SETTINGS[args.setting], cap=args.cap)
    _emit(outcome_to_dict(outcome), args.output)
    return 0


def _graph_shape(path: str) -> tuple[int, list[tuple[int, int]]]:
    graph = _load_graph(path)
    return len(graph.vertices), list(graph.edges)


def _cmd_reduce(args) -> int:
    if args.kind == "b2cnf":
        formula = b2cnf_from_dict(load(args.input))
        result = b2cnf_to_bis(formula)
    else:
        if args.k is None:
            raise ValueError(f"reduction {args.kind!r} requires --k")
        n, edges = _graph_shape(args.input)
        builder = {
            "vc": vc_to_bis,
            "planar-vc": planar_vc_to_bipartite_bis,
            "vc-bipartite": vc_to_bipartite_bis,
            "is": is_to_bis,
        }[args.kind]
        result = builder(n, edges, args.k)
    save(args.output, graph_to_dict(result.graph))
    meta = {
        "kind": args.kind,
        "k": args.k,
        "targets": [v.code for v in result.targets],
        "thresholds": {v.code: t for v, t in result.thresholds.items()},
        "constants": result.constants,
        "vertices": len(result.graph.vertices),
        "edges": len(result.graph.edges),
    }
    sys.stdout.write(dumps(meta))
    return 0


def _cmd_verify(args) -> int:
    graph = _load_graph(args.input)
    variant = Variant.from_code(args.variant)
    ok = verify_certificate(
        graph, variant, _parse_ids(args.leader), args.claimed
    )
    sys.stdout.write("true\n" if ok else "false\n")
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "graph":
        graph = gen_random_graph(
            n=args.n,
            edge_prob=args.edge_prob,
            leader_fraction=args.leader_fraction,
            max_weight=args.max_weight,
            bipartite=args.bipartite,
            seed=args.seed,
        )
        _emit(graph_to_dict(graph), args.output)
    else:
        instance = gen_random_intervals(
            n=args.n,
            coord_max=args.coord_max,
            leader_fraction=args.leader_fraction,
            max_weight=args.max_weight,
            seed=args.seed,
        )
        _emit(intervals_to_dict(instance), args.output)
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    rows = bench_dp(sizes, seed=args.seed, setting=_SETTINGS[args.setting])
    for n, ms in rows:
        sys.stdout.write(f"{n},{ms:.3f}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bilevelis",
        description="Exact bilevel independent-set / interval-selection toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, output=True):
        p.add_argument("--input", required=True, help="instance file")
        if output:
            p.add_argument("--output", help="write result here instead of stdout")

    p = sub.add_parser("solve", help="exact solve of a graph instance")
    p.add_argument("--variant", required=True, help="{cs|cb}-{ds|db}-{o|p}")
    add_common(p)
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="upper bound on worker parallelism (execution may use fewer)",
    )
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("solve-intervals", help="interval dynamic program")
    p.add_argument("--setting", required=True, choices=["o", "p"])
    add_common(p)
    p.set_defaults(func=_cmd_solve_intervals)

    p = sub.add_parser("follower", help="optimal follower reaction")
    p.add_argument("--variant", required=True)
    p.add_argument("--leader", required=True, help="comma-separated ids ('' = empty)")
    add_common(p)
    p.set_defaults(func=_cmd_follower)

    p = sub.add_parser("brute", help="exhaustive graph oracle")
    p.add_argument("--variant", required=True)
    p.add_argument("--leader", help="if given, only the follower reaction is enumerated")
    p.add_argument("--cap", type=int, default=16)
    add_common(p)
    p.set_defaults(func=_cmd_brute)

    p = sub.add_parser("brute-intervals", help="exhaustive interval oracle")
    p.add_argument("--setting", required=True, choices=["o", "p"])
    p.add_argument("--cap", type=int, default=20)
    add_common(p)
    p.set_defaults(func=_cmd_brute_intervals)

    p = sub.add_parser("reduce", help="generate a hardness-reduction instance")
    p.add_argument(
        "kind", choices=["b2cnf", "vc", "planar-vc", "vc-bipartite", "is"]
    )
    p.add_argument("--k", type=int, help="source decision threshold")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True, help="graph file to write")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify", help="check a leader action as a certificate")
    p.add_argument("--variant", required=True)
    p.add_argument("--leader", required=True)
    p.add_argument("--claimed", type=int, required=True)
    add_common(p, output=False)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="seeded random instance")
    p.add_argument("kind", choices=["graph", "intervals"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edge-prob", type=float, default=0.3)
    p.add_argument("--coord-max", type=int, default=20)
    p.add_argument("--leader-fraction", type=float, default=0.5)
    p.add_argument("--max-weight", type=int, default=9)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="time the interval solver")
    p.add_argument("--sizes", required=True, help="comma-separated, ascending")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--setting", choices=["o", "p"], default="o")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (SolverError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
