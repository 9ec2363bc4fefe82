"""Command-line front end.

Exit codes: 0 success, 1 mismatch on a proved value / proposition
violation / failed certificate, 2 usage error, 3 oracle budget exhausted
without a conclusion.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import partition_opt as po
from . import sweeps
from . import turan_formulas as tf
from .brute_oracle import Budget, brute_force_ex, verify_instance
from .errors import BudgetExceeded, ExtremalError
from .extremal_construct import build_lower_bound_graph, certify
from .graph_core import find_disjoint_cliques, read_edge_list, write_edge_list
from .report import SCHEMAS

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

FORMULAS = {
    "thm11": lambda ns, t, k: tf.ex_clique(ns, t),
    "thm12": lambda ns, t, k: tf.ex_kclique_full_r(ns, k),
    "thm13": lambda ns, t, k: tf.ex_kK3_fourpartite(ns, k),
    "thm16": lambda ns, t, k: tf.ex_kK3_main(ns, k),
    "conj15": tf.conjecture15_value,
    "conj16": tf.conjecture_value,
    "kk2": lambda ns, t, k: tf.ex_kmatching(ns, k),
    "erdos": lambda ns, t, k: tf.ex_kK3_complete(sum(ns), k),
}


def _sizes(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _budget(args) -> Budget:
    return Budget(max_nodes=args.budget_nodes, max_seconds=args.budget_secs)


def _fmt_partition(partition) -> str:
    return " ".join("{" + ",".join(str(i) for i in block) + "}" for block in partition)


def cmd_ft(args) -> int:
    sizes = po.canonical(args.sizes)
    result = po.f3_fast(sizes) if args.t == 3 else po.f_general(sizes, args.t)
    if args.json:
        witness = None if result.witness is None else [list(b) for b in result.witness]
        _emit({"sizes": list(sizes), "t": args.t, "value": result.value, "witness": witness})
        return EXIT_OK
    print(result.value)
    if args.witness:
        if result.witness is None:
            print("witness: none (f_2 = 0)")
        else:
            print(f"witness (0-based indices into sorted sizes {list(sizes)}): {_fmt_partition(result.witness)}")
    return EXIT_OK


def cmd_formula(args) -> int:
    sizes = po.canonical(args.sizes)
    if args.which:
        values = {args.which: FORMULAS[args.which](sizes, args.t, args.k)}
    else:
        values = tf.applicable_formulas(sizes, args.t, args.k)
    if args.json:
        _emit({
            "sizes": list(sizes), "t": args.t, "k": args.k,
            "formulas": {fid: fv.to_dict() for fid, fv in sorted(values.items())},
        })
        return EXIT_OK
    if not values:
        print("no formula applies to these parameters")
    for fid, fv in sorted(values.items()):
        proved = "proved" if fv.in_proved_range else "conjectured"
        print(f"{fid:<7} {fv.value:>10}  {proved:<11}  {fv.range_note}")
    return EXIT_OK


def cmd_construct(args) -> int:
    graph, plan = build_lower_bound_graph(args.sizes, args.t, args.k)
    claimed = tf.conjecture_value(plan.params.ns, args.t, args.k).value
    cert = certify(graph, args.t, args.k, claimed)
    if args.out:
        write_edge_list(graph, args.out)
    if args.json:
        partition = None if plan.witness_partition is None else [list(b) for b in plan.witness_partition]
        _emit({
            "sizes": list(plan.params.ns), "t": args.t, "k": args.k,
            "v0_size": plan.v0_size, "witness_partition": partition,
            "certificate": cert.to_dict(), "out": args.out,
        })
    else:
        print(f"sizes {list(plan.params.ns)}  t={args.t}  k={args.k}  |V_0|={plan.v0_size}")
        if plan.witness_partition is not None:
            print(f"groups (0-based part indices): {_fmt_partition(plan.witness_partition)}")
        print(f"edges {cert.measured_edges} (claimed {claimed}): {'ok' if cert.edges_ok else 'MISMATCH'}")
        print(f"spanning subgraph: {'ok' if cert.spanning_ok else 'FAILED'}")
        print(f"{args.k}K_{args.t}-free: {'yes' if cert.free else 'NO'}")
        if args.out:
            print(f"wrote {args.out}")
    return EXIT_OK if cert.passed else EXIT_MISMATCH


def cmd_check_free(args) -> int:
    graph = read_edge_list(args.infile)
    witness = find_disjoint_cliques(graph, args.t, args.k)
    if args.json:
        _emit({
            "t": args.t, "k": args.k, "free": witness is None,
            "witness": None if witness is None else [list(c) for c in witness.cliques],
        })
    elif witness is None:
        print("FREE")
    else:
        print(" ".join("(" + ",".join(map(str, c)) + ")" for c in witness.cliques))
    return EXIT_OK


def cmd_oracle(args) -> int:
    sizes = po.canonical(args.sizes)
    try:
        result = brute_force_ex(sizes, args.t, args.k, _budget(args))
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc.lower} <= ex <= {exc.upper} after {exc.nodes_explored} nodes",
              file=sys.stderr)
        return EXIT_BUDGET
    if args.json:
        _emit({"sizes": list(sizes), "t": args.t, "k": args.k, "result": result.to_dict()})
    else:
        print(f"ex = {result.value}  (deletions {result.deletions}, nodes {result.nodes_explored})")
    return EXIT_OK


def _report(sizes, t, k, args, run_oracle: bool):
    """(report dict, exit code) for one instance."""
    start = time.perf_counter()
    try:
        report = verify_instance(sizes, t, k, _budget(args), run_oracle=run_oracle)
        code = EXIT_MISMATCH if report.proved_mismatch else EXIT_OK
    except BudgetExceeded as exc:
        report = verify_instance(sizes, t, k, run_oracle=False)
        report.oracle_bounds = {"lower": exc.lower, "upper": exc.upper, "nodes_explored": exc.nodes_explored}
        report.notes.append("oracle budget exhausted; value not determined")
        code = EXIT_BUDGET
    if args.timing:
        report.elapsed_seconds = round(time.perf_counter() - start, 6)
    return report.to_dict(), code


def _combine(codes) -> int:
    codes = set(codes)
    for code in (EXIT_MISMATCH, EXIT_BUDGET):
        if code in codes:
            return code
    return EXIT_OK


def cmd_verify(args) -> int:
    data, code = _report(args.sizes, args.t, args.k, args, run_oracle=True)
    if args.json:
        _emit(data)
        return code
    print(f"sizes {data['ns']}  t={data['t']}  k={data['k']}")
    if data["oracle"] is not None:
        print(f"oracle       {data['oracle']['value']:>8}")
    elif data["oracle_bounds"] is not None:
        b = data["oracle_bounds"]
        print(f"oracle       {b['lower']}..{b['upper']} (budget exhausted)")
    if data["construction_edges"] is not None:
        print(f"construction {data['construction_edges']:>8}")
    for fid, fv in data["formulas"].items():
        proved = "proved" if fv["in_proved_range"] else "conjectured"
        print(f"{fid:<12} {fv['value']:>8}  {proved}")
    print(f"verdict: {data['verdict']}")
    for note in data["notes"]:
        print(f"note: {note}")
    return code


def cmd_sweep(args) -> int:
    codes = []
    for ns in sweeps.sorted_tuples(args.r, args.size_max):
        for k in range(1, args.k_max + 1):
            data, code = _report(ns, args.t, k, args, run_oracle=args.oracle)
            _emit(data)
            codes.append(code)
    return _combine(codes)


def cmd_props(args) -> int:
    runner = sweeps.PROPOSITIONS[args.which]
    if args.which == "2.1":
        summary = runner(r_max=args.r_max, size_max=args.size_max, k_max=args.k_max)
    else:
        summary = runner(r_max=args.r_max, size_max=args.size_max)
    if args.json:
        _emit(summary.to_dict())
    else:
        print(f"proposition {args.which}: {summary.checked} cases checked, {summary.violations} violations")
        for example in summary.examples:
            print(f"violation: {json.dumps(example, sort_keys=True)}")
        for note in summary.notes:
            print(f"note: {note}")
    return EXIT_OK if summary.ok else EXIT_MISMATCH


def cmd_schema(args) -> int:
    print(json.dumps(SCHEMAS[args.name], indent=2, sort_keys=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiex",
        description="Extremal numbers ex(K_{n_1,...,n_r}, kK_t): formulas, constructions, exact search.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of a table")

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget-nodes", type=int, default=Budget.max_nodes)
    budget.add_argument("--budget-secs", type=float, default=Budget.max_seconds)
    budget.add_argument("--timing", action="store_true",
                        help="record wall time in reports (output is then not reproducible)")

    def instance(p, need_k=True):
        p.add_argument("--sizes", type=_sizes, required=True, help="part sizes, e.g. 2,2,2")
        p.add_argument("--t", type=int, required=True)
        if need_k:
            p.add_argument("--k", type=int, required=True)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ft", parents=[common], help="evaluate f_t")
    instance(p, need_k=False)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_ft)

    p = sub.add_parser("formula", parents=[common], help="closed-form values")
    instance(p)
    p.add_argument("--which", choices=sorted(FORMULAS))
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", parents=[common], help="build and certify the lower-bound graph")
    instance(p)
    p.add_argument("--out", help="write the edge list here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check-free", parents=[common], help="search an edge-list graph for kK_t")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_check_free)

    p = sub.add_parser("oracle", parents=[common, budget], help="exact value by edge-deletion search")
    instance(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common, budget], help="oracle vs formulas vs construction")
    instance(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[budget], help="JSON line per sorted tuple and k")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--size-max", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="run the exact oracle on every instance")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("props", parents=[common], help="inequality/equivalence sweeps")
    p.add_argument("--which", choices=sorted(sweeps.PROPOSITIONS), required=True)
    p.add_argument("--size-max", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--k-max", type=int, default=4, help="largest k for 2.1 (from 2)")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("schema", help="print the JSON schema of a subcommand's output")
    p.add_argument("name", choices=sorted(SCHEMAS))
    p.set_defaults(func=cmd_schema)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (ExtremalError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
