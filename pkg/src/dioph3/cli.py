"""Command-line front end.

Machine-readable reports go to stdout, diagnostics to stderr.
Exit codes: 0 success, 1 invalid input, 2 method disagreement,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import statistics
import sys
import time

from . import genfunc, reduction_lab, three_var, two_var
from .errors import BudgetExceededError, Dioph3Error
from .three_var import ThreeVarInstance
from .two_var import TwoVarEquation

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DISAGREEMENT = 2
EXIT_BUDGET = 3

COUNT_METHODS = ("residue", "closed", "exhaustive", "series", "brute")


class _Parser(argparse.ArgumentParser):
    """argparse parser that exits with the invalid-input code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _dump(report: dict, fmt: str, csv_rows, csv_header) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(csv_header)
        writer.writerows(csv_rows)
    else:
        for key, value in report.items():
            print(f"{key}: {value}")


def _timed(func):
    start = time.perf_counter_ns()
    value = func()
    return value, (time.perf_counter_ns() - start) // 1000


def _run_method(method: str, inst: ThreeVarInstance, budget: int | None) -> int:
    if method == "residue":
        return three_var.count_residue(inst)
    if method == "closed":
        return three_var.count_closed(inst)[0]
    if method == "exhaustive":
        return len(three_var.enumerate_exhaustive(inst))
    if method == "series":
        return genfunc.series_count(
            [inst.p, inst.q, inst.l], inst.n, budget=budget or genfunc.SERIES_BUDGET
        )
    if method == "brute":
        return genfunc.brute_force_count(inst, budget=budget or genfunc.BRUTE_BUDGET)
    raise ValueError(f"unknown method {method!r}")


def _instance(args) -> ThreeVarInstance:
    return ThreeVarInstance(args.p, args.q, args.l, args.n)


def _cmd_count(args) -> int:
    inst = _instance(args)
    methods = COUNT_METHODS if args.method == "all" else (args.method,)
    counts = {}
    timing = {}
    for method in methods:
        counts[method], timing[method] = _timed(
            lambda m=method: _run_method(m, inst, args.budget)
        )
    agree = len(set(counts.values())) == 1
    report = {
        "instance": {"p": inst.p, "q": inst.q, "l": inst.l, "n": inst.n},
        "methods": list(methods),
        "counts": counts,
        "count": counts[methods[0]] if agree else None,
        "agree": agree,
        "timing_us": timing,
    }
    _dump(
        report,
        args.format,
        csv_rows=[[m, counts[m], timing[m]] for m in methods],
        csv_header=["method", "count", "us"],
    )
    if not agree:
        print(f"method disagreement: {counts}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_OK


def _cmd_solve(args) -> int:
    inst = _instance(args)
    if args.method == "exhaustive":
        solutions, us = _timed(lambda: three_var.enumerate_exhaustive(inst))
    else:
        solutions, us = _timed(lambda: three_var.enumerate_closed(inst))
    report = {
        "instance": {"p": inst.p, "q": inst.q, "l": inst.l, "n": inst.n},
        "method": args.method,
        "count": len(solutions),
        "solutions": [list(t) for t in solutions],
        "timing_us": {args.method: us},
    }
    _dump(report, args.format, csv_rows=[list(t) for t in solutions],
          csv_header=["x", "y", "z"])
    return EXIT_OK


def _cmd_two(args) -> int:
    eq = TwoVarEquation(args.a, args.b, args.m)
    solutions, us = _timed(lambda: two_var.enumerate_nonneg(eq))
    report = {
        "equation": {"a": eq.a, "b": eq.b, "m": eq.m},
        "count": len(solutions),
        "solutions": [list(pair) for pair in solutions],
        "binner": None,
        "bcs_count": None,
        "timing_us": {"enumerate": us},
    }
    counts = {"enumerate": len(solutions)}
    if math.gcd(eq.a, eq.b) == 1:
        binner_count, data = two_var.count_binner(eq)
        report["binner"] = {"a1": data.a1, "b1": data.b1, "max_index": data.max_index}
        report["bcs_count"] = two_var.count_bcs_table(eq)
        counts["binner"] = binner_count
        counts["bcs"] = report["bcs_count"]
    agree = len(set(counts.values())) == 1
    _dump(report, args.format, csv_rows=[list(p) for p in solutions],
          csv_header=["x", "y"])
    if not agree:
        print(f"method disagreement: {counts}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_OK


def _cmd_mcnugget(args) -> int:
    count, us = _timed(lambda: three_var.mcnugget_count(args.n))
    report = {"n": args.n, "count": count, "timing_us": {"mcnugget": us}}
    _dump(report, args.format, csv_rows=[[args.n, count]], csv_header=["n", "count"])
    return EXIT_OK


def _cmd_frobenius(args) -> int:
    (frob, nonrep), us = _timed(lambda: two_var.frobenius_two(args.a, args.b))
    report = {
        "a": args.a,
        "b": args.b,
        "frobenius": frob,
        "non_representable_count": nonrep,
        "timing_us": {"frobenius": us},
    }
    _dump(report, args.format,
          csv_rows=[[args.a, args.b, frob, nonrep]],
          csv_header=["a", "b", "frobenius", "non_representable_count"])
    return EXIT_OK


def _cmd_reduce(args) -> int:
    inst = _instance(args)
    sets_ = reduction_lab.boundary_sets(inst)
    heuristic, complete = reduction_lab.heuristic_complete(inst)
    report = {
        "instance": {"p": inst.p, "q": inst.q, "l": inst.l, "n": inst.n},
        "faces": {
            "s1": [list(t) for t in sets_.s1],
            "s2": [list(t) for t in sets_.s2],
            "s3": [list(t) for t in sets_.s3],
        },
        "face_feasible": list(sets_.face_feasible),
        "heuristic_solutions": [list(t) for t in heuristic],
        "heuristic_complete": complete,
        "count": three_var.count_closed(inst)[0],
    }
    _dump(report, args.format, csv_rows=[list(t) for t in heuristic],
          csv_header=["x", "y", "z"])
    return EXIT_OK


def _witness_json(witness):
    if witness is None:
        return None
    return {
        "target": list(witness.target),
        "s_a": list(witness.s_a),
        "s_b": list(witness.s_b),
        "s_c": list(witness.s_c),
        "faces": list(witness.signature),
    }


def _cmd_conjecture(args) -> int:
    inst = _instance(args)
    rep = reduction_lab.conjecture_check(
        inst, budget=args.budget or reduction_lab.CONJECTURE_BUDGET
    )
    report = {
        "instance": {"p": inst.p, "q": inst.q, "l": inst.l, "n": inst.n},
        "total_solutions": rep.total_solutions,
        "witnessed_strict": rep.witnessed_strict,
        "witnessed_free": rep.witnessed_free,
        "counterexamples": [list(t) for t in rep.counterexamples],
        "size_sum": rep.size_sum,
        "bound_limit": rep.bound_limit,
        "bound_holds": rep.bound_holds,
        "flagged_for_review": rep.flagged_for_review,
        "free_witnesses": [_witness_json(w) for w in rep.free_witnesses],
    }
    rows = [
        [*w["target"], *w["s_a"], *w["s_b"], *w["s_c"]]
        for w in report["free_witnesses"]
        if w is not None
    ]
    _dump(report, args.format, csv_rows=rows,
          csv_header=["x", "y", "z", "ax", "ay", "az", "bx", "by", "bz",
                      "cx", "cy", "cz"])
    return EXIT_OK


def _cmd_sweep(args) -> int:
    rep = reduction_lab.conjecture_sweep(
        args.p_max, args.q_max, args.l_max, args.n_max,
        budget=args.budget or reduction_lab.CONJECTURE_BUDGET,
    )
    report = {
        "grid": {"p_max": rep.p_max, "q_max": rep.q_max,
                 "l_max": rep.l_max, "n_max": rep.n_max},
        "instances": rep.instances,
        "fully_witnessed_free": rep.fully_witnessed_free,
        "fully_witnessed_strict": rep.fully_witnessed_strict,
        "with_counterexamples": rep.with_counterexamples,
        "bound_violations": rep.bound_violations,
        "flagged_for_review": rep.flagged_for_review,
        "counterexamples": [
            {"p": p, "q": q, "l": l, "n": n, "solution": list(t)}
            for (p, q, l, n, t) in rep.counterexample_list
        ],
        "bound_violation_instances": [
            {"p": p, "q": q, "l": l, "n": n, "count": c, "size_sum": s}
            for (p, q, l, n, c, s) in rep.bound_violation_list
        ],
    }
    rows = [[p, q, l, n, *t] for (p, q, l, n, t) in rep.counterexample_list]
    _dump(report, args.format, csv_rows=rows,
          csv_header=["p", "q", "l", "n", "x", "y", "z"])
    return EXIT_OK


def _cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in COUNT_METHODS:
            print(f"unknown method {m!r}", file=sys.stderr)
            return EXIT_INVALID
    n_values = [int(v) for v in args.n_list.split(",") if v.strip()]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["p", "q", "l", "n"] + [f"{m}_us" for m in methods])
    for n in n_values:
        inst = ThreeVarInstance(args.p, args.q, args.l, n)
        counts = {}
        medians = {}
        for method in methods:
            samples = []
            for _ in range(args.reps):
                value, us = _timed(lambda m=method: _run_method(m, inst, args.budget))
                counts[method] = value
                samples.append(us)
            medians[method] = int(statistics.median(samples))
        if len(set(counts.values())) != 1:
            print(f"method disagreement at n={n}: {counts}", file=sys.stderr)
            return EXIT_DISAGREEMENT
        writer.writerow([args.p, args.q, args.l, n] + [medians[m] for m in methods])
    return EXIT_OK


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return number


def _nonnegative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return number


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    common.add_argument("--budget", type=_positive, default=None,
                        help="iteration cap for series/brute/search methods")
    common.add_argument("--seed", type=int, default=None,
                        help="reserved; all algorithms are deterministic")

    parser = _Parser(prog="dioph3", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def triple(p):
        p.add_argument("-p", type=_positive, required=True)
        p.add_argument("-q", type=_positive, required=True)
        p.add_argument("-l", type=_positive, required=True)
        p.add_argument("-n", type=_nonnegative, required=True)

    p_count = sub.add_parser("count", parents=[common],
                             help="count solutions of p*x + q*y + l*z = n")
    triple(p_count)
    p_count.add_argument("--method", choices=COUNT_METHODS + ("all",), default="all")
    p_count.set_defaults(func=_cmd_count)

    p_solve = sub.add_parser("solve", parents=[common],
                             help="enumerate all solutions")
    triple(p_solve)
    p_solve.add_argument("--method", choices=("closed", "exhaustive"),
                         default="closed")
    p_solve.set_defaults(func=_cmd_solve)

    p_two = sub.add_parser("two", parents=[common],
                           help="two-variable equation a*x + b*y = m")
    p_two.add_argument("-a", type=_positive, required=True)
    p_two.add_argument("-b", type=_positive, required=True)
    p_two.add_argument("-m", type=_nonnegative, required=True)
    p_two.set_defaults(func=_cmd_two)

    p_mc = sub.add_parser("mcnugget", parents=[common],
                          help="count solutions of 6x + 9y + 20z = n")
    p_mc.add_argument("-n", type=_nonnegative, required=True)
    p_mc.set_defaults(func=_cmd_mcnugget)

    p_frob = sub.add_parser("frobenius", parents=[common],
                            help="two-variable Frobenius number and gap count")
    p_frob.add_argument("-a", type=_positive, required=True)
    p_frob.add_argument("-b", type=_positive, required=True)
    p_frob.set_defaults(func=_cmd_frobenius)

    p_red = sub.add_parser("reduce", parents=[common],
                           help="boundary face sets and completion procedure")
    triple(p_red)
    p_red.set_defaults(func=_cmd_reduce)

    p_conj = sub.add_parser("conjecture", parents=[common],
                            help="witness search for one instance")
    triple(p_conj)
    p_conj.set_defaults(func=_cmd_conjecture)

    p_sweep = sub.add_parser("sweep", parents=[common],
                             help="witness search over a coefficient grid")
    p_sweep.add_argument("--p-max", type=_nonnegative, required=True)
    p_sweep.add_argument("--q-max", type=_nonnegative, required=True)
    p_sweep.add_argument("--l-max", type=_nonnegative, required=True)
    p_sweep.add_argument("--n-max", type=_nonnegative, required=True)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_bench = sub.add_parser("bench", parents=[common],
                             help="per-method timing table (CSV)")
    p_bench.add_argument("-p", type=_positive, required=True)
    p_bench.add_argument("-q", type=_positive, required=True)
    p_bench.add_argument("-l", type=_positive, required=True)
    p_bench.add_argument("--n-list", default="",
                         help="comma-separated right-hand sides")
    p_bench.add_argument("--reps", type=_positive, default=3)
    p_bench.add_argument("--methods", default=",".join(COUNT_METHODS))
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (Dioph3Error, ValueError, OverflowError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
