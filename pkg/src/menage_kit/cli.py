"""``menage-kit`` command line tool.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from menage_kit import cycles, expand, series
from menage_kit.catalan import enumerate_nice
from menage_kit.perm import LimitExceeded, ParseError, Permutation, parse
from menage_kit.reduce import normal_form, random_policy
from menage_kit.report import Report

SEQUENCES = ("catalan", "straight-menage", "ordinary-menage", "nice-count", "w", "r")
VERIFIERS = ("eq3", "eq4", "eq5", "eq6", "lemma3", "eta", "appendix", "wmn", "rmn", "weights")


class UsageError(Exception):
    pass


def _nice_count(n: int) -> int:
    # a_1 = 1 by convention (the empty bijection)
    return 1 if n == 0 else len(enumerate_nice(n))


def sequence_values(name: str, max_n: int, m: int | None = None) -> list[int]:
    if name in ("w", "r") and m is None:
        raise UsageError(f"seq {name} needs --m")
    if name == "catalan":
        f: Callable[[int], int] = series.catalan_number
    elif name == "straight-menage":
        f = series.menage_V
    elif name == "ordinary-menage":
        f = series.menage_U
    elif name == "nice-count":
        f = _nice_count
    elif name == "w":
        return [expand.w_count(m, n) for n in range(max_n + 1)]
    elif name == "r":
        return [expand.r_count(m, n) for n in range(max_n + 1)]
    else:
        raise UsageError(f"unknown sequence {name!r}; choose from {', '.join(SEQUENCES)}")
    return [f(n) for n in range(max_n + 1)]


def run_verifier(name: str, order: int) -> Report:
    if name == "eq3":
        return series.verify_theorem1_straight(order)
    if name == "eq4":
        return series.verify_theorem1_ordinary(order)
    if name == "lemma3":
        return series.verify_lemma3(order)
    if name == "eta":
        return series.verify_eta(order)
    if name == "appendix":
        return series.verify_appendix(order)
    # brute-force verifiers run at their largest supported order
    if name == "eq5":
        return cycles.verify_theorem2_straight(min(order, cycles.THEOREM2_LIMIT))
    if name == "eq6":
        return cycles.verify_theorem2_ordinary(min(order, cycles.THEOREM2_LIMIT))
    if name == "weights":
        return cycles.verify_weights(min(order, 5))
    if name in ("wmn", "rmn"):
        mode = "straight" if name == "wmn" else "ordinary"
        conv = expand.verify_wmn(order) if name == "wmn" else expand.verify_rmn(order)
        oracle = expand.verify_expansions(min(order, 6), mode)
        return Report(name, order, conv.passed and oracle.passed, parts=(conv, oracle))
    raise UsageError(f"unknown verifier {name!r}; choose from {', '.join(VERIFIERS)} or all")


def _report_json(r: Report) -> dict:
    bad = r.first_failure()
    return {
        "name": r.name,
        "order": r.order,
        "passed": r.passed,
        "mismatch": None if r.passed else bad.mismatch,
        "detail": None if r.passed else (bad.name + (f": {bad.detail}" if bad.detail else "")),
    }


def diagram(perm: Permutation, layout: str) -> dict:
    n = perm.n
    if layout == "horizontal":
        nodes = [{"id": i, "x": i - 1} for i in range(1, n + 1)]
    elif layout == "circular":
        # counter-clockwise, as a fraction of a full turn from point 1
        nodes = [{"id": i, "turn": f"{i - 1}/{n}"} for i in range(1, n + 1)]
    else:
        raise UsageError(f"unknown layout {layout!r}")
    arcs = [{"from": i, "to": perm(i)} for i in range(1, n + 1)]
    return {"layout": layout, "n": n, "nodes": nodes, "arcs": arcs}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="menage-kit", description="Exact ménage permutation combinatorics.")
    sub = parser.add_subparsers(dest="command", metavar="<subcommand>")
    sub.required = True

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    p = sub.add_parser("seq", help="print a sequence")
    p.add_argument("name", choices=SEQUENCES)
    p.add_argument("--max", type=int, default=10, dest="max_n")
    p.add_argument("--m", type=int)
    common(p)

    p = sub.add_parser("cycles", help="ménage permutations of [n] counted by cycles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("straight", "ordinary"), default="straight")
    common(p)

    p = sub.add_parser("reduce", help="reduce a permutation to its ménage normal form")
    p.add_argument("--perm", required=True)
    p.add_argument("--mode", choices=("straight", "ordinary"), default="straight")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--seed", type=int, help="pick reductions at random with this seed")
    common(p)

    p = sub.add_parser("expand", help="all permutations of size m+n reducing to a ménage permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("straight", "ordinary"), default="straight")
    common(p)

    p = sub.add_parser("verify", help="check generating-function identities")
    p.add_argument("name", choices=VERIFIERS + ("all",))
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    common(p)

    p = sub.add_parser("diagram", help="arc list of the horizontal or circular diagram")
    p.add_argument("--perm", required=True)
    p.add_argument("--layout", choices=("horizontal", "circular"), default="horizontal")
    common(p)
    return parser


def _dispatch(args) -> tuple[int, str]:
    cmd = args.command
    if cmd == "seq":
        if args.max_n < 0:
            raise UsageError("--max must be nonnegative")
        values = sequence_values(args.name, args.max_n, args.m)
        if args.json:
            return 0, json.dumps(values) + "\n"
        return 0, " ".join(map(str, values)) + "\n"

    if cmd == "cycles":
        table = (cycles.straight_by_cycles if args.kind == "straight" else cycles.ordinary_by_cycles)(args.n)
        doc = cycles.cycle_table_json(args.n, args.kind, table)
        if args.json:
            return 0, json.dumps(doc) + "\n"
        lines = [f"{args.kind} n={args.n} total={doc['total']}"]
        lines += [f"{j} {c}" for j, c in doc["counts"].items()]
        return 0, "\n".join(lines) + "\n"

    if cmd == "reduce":
        perm = parse(args.perm)
        policy = random_policy(args.seed) if args.seed is not None else None
        trace = normal_form(perm, args.mode, policy)
        if args.json:
            doc = {
                "input": str(perm),
                "mode": args.mode,
                "steps": [[s.kind, s.site, s.before_n] for s in trace.steps],
                "result": str(trace.result),
            }
            return 0, json.dumps(doc) + "\n"
        if args.trace:
            return 0, trace.serialize()
        return 0, str(trace.result) + "\n"

    if cmd == "expand":
        perm = parse(args.perm)
        result = sorted(expand.enumerate_expansions(perm, args.n, args.mode), key=lambda p: p.images)
        if args.json:
            return 0, json.dumps({"perm": str(perm), "n": args.n, "mode": args.mode,
                                  "count": len(result), "perms": [p.one_line() for p in result]}) + "\n"
        return 0, "".join(p.one_line() + "\n" for p in result) + f"count {len(result)}\n"

    if cmd == "verify":
        names = VERIFIERS if args.name == "all" else (args.name,)
        reports = [run_verifier(name, args.order) for name in names]
        ok = all(reports)
        if args.json:
            doc = {"passed": ok, "reports": [_report_json(r) for r in reports]}
            return (0 if ok else 1), json.dumps(doc) + "\n"
        lines = [r.line() for r in reports]
        if args.name == "all":
            lines.append(f"{'PASS' if ok else 'FAIL'} all order={args.order}")
        return (0 if ok else 1), "\n".join(lines) + "\n"

    if cmd == "diagram":
        perm = parse(args.perm)
        doc = diagram(perm, args.layout)
        if args.json:
            return 0, json.dumps(doc) + "\n"
        lines = [f"{i} -> {perm(i)}" for i in range(1, perm.n + 1)]
        lines.append("graph " + json.dumps(doc))
        return 0, "\n".join(lines) + "\n"

    raise UsageError(f"unknown subcommand {cmd!r}")


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Execute one invocation; returns ``(exit_code, stdout_text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        code, out = _dispatch(args)
    except (UsageError, ParseError, LimitExceeded, ValueError) as exc:
        print(f"menage-kit: error: {exc}", file=sys.stderr)
        return 2, ""
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
        return code, ""
    return code, out


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
