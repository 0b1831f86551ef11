"""Command-line interface: ``ecix compute|family|enumerate|extremal|verify``.

Exit codes: 0 success / pass / conjecture-holds, 1 usage or input error,
2 verification failure or refuted conjecture.
"""

from __future__ import annotations

import argparse
import configparser
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .enumeration import DEFAULT_BUDGET, BudgetExceeded, ClassFilter, Dominating, EmptyClassError, enumerate_connected
from .extremal import STATEMENTS, search_extremal, verify
from .families import ALIASES, FAMILIES, FamilySpec, closed_eci, construct, is_degenerate
from .graph import GraphError, eci, eci_report
from .graph6 import decode_graph6, encode_graph6
from .report import FORMATS, emit_report

CONFIG_KEYS = ("budget", "jobs", "output-format")


class UsageError(Exception):
    pass


def load_config(path: Optional[str]) -> dict[str, str]:
    """Read ``key = value`` lines (no section header needed)."""
    if path is None:
        return {}
    text = Path(path).read_text(encoding="utf-8")
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    parser.read_string("[ecix]\n" + text)
    values = {k: v.strip().strip('"').strip("'") for k, v in parser["ecix"].items()}
    unknown = set(values) - set(CONFIG_KEYS)
    if unknown:
        raise UsageError(f"unknown config key(s): {', '.join(sorted(unknown))}")
    return values


def _settings(args: argparse.Namespace) -> tuple[int, int, str]:
    cfg = load_config(args.config)
    budget = args.budget
    if budget is None and os.environ.get("ECIX_BUDGET"):
        budget = int(os.environ["ECIX_BUDGET"])
    if budget is None:
        budget = int(cfg.get("budget", DEFAULT_BUDGET))
    jobs = args.jobs if args.jobs is not None else int(cfg.get("jobs", 1))
    fmt = args.format or cfg.get("output-format", "table")
    if fmt not in FORMATS:
        raise UsageError(f"unknown output format {fmt!r}")
    return budget, jobs, fmt


def _filter(args: argparse.Namespace) -> ClassFilter:
    return ClassFilter(args.n, pending=args.pending, edges=args.edges, dominating=Dominating(args.dominating))


def cmd_compute(args: argparse.Namespace, out) -> int:
    _, _, fmt = _settings(args)
    lines = [args.g6] if args.g6 else [ln for ln in sys.stdin.read().splitlines() if ln.strip()]
    if not lines:
        raise UsageError("no graph given: pass --g6 or graph6 lines on stdin")
    for line in lines:
        g = decode_graph6(line)
        if fmt == "table" and len(lines) > 1:
            out.write(f"# {line.strip()}\n")
        out.write(emit_report(eci_report(g), fmt))
    return 0


def cmd_family(args: argparse.Namespace, out) -> int:
    spec = FamilySpec(args.name, args.n, p=args.p, x=args.x, d=args.d, k=args.k, i=args.i)
    g = construct(spec)
    closed = closed_eci(spec)
    if is_degenerate(spec):
        print(f"warning: {spec.label()} is degenerate (equals the complete graph)", file=sys.stderr)
    out.write(f"{spec.label()}\n")
    out.write(f"graph6 {encode_graph6(g)}\n")
    out.write(f"order {g.n} edges {g.m}\n")
    out.write(f"eci {eci(g)}\n")
    out.write(f"closed_form {closed if closed is not None else 'none'}\n")
    return 0


def cmd_enumerate(args: argparse.Namespace, out) -> int:
    budget, jobs, _ = _settings(args)
    graphs = enumerate_connected(_filter(args), budget=budget, jobs=jobs)
    if args.count_only:
        out.write(f"{sum(1 for _ in graphs)}\n")
    else:
        for g in graphs:
            out.write(encode_graph6(g) + "\n")
    return 0


def cmd_extremal(args: argparse.Namespace, out) -> int:
    budget, jobs, fmt = _settings(args)
    res = search_extremal(_filter(args), args.direction, budget=budget, jobs=jobs)
    out.write(emit_report(res, fmt))
    return 0


def cmd_verify(args: argparse.Namespace, out) -> int:
    budget, jobs, fmt = _settings(args)
    if args.budget is None and not os.environ.get("ECIX_BUDGET") and args.config is None:
        budget = None
    outcome = verify(args.statement, args.n_min, args.n_max, budget=budget, jobs=jobs)
    out.write(emit_report(outcome, fmt))
    return outcome.exit_code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file with budget, jobs, output-format")
    common.add_argument("--budget", type=int, help=f"largest order to enumerate (default {DEFAULT_BUDGET}, env ECIX_BUDGET)")
    common.add_argument("--jobs", type=int, help="worker processes for order-9+ enumeration")
    common.add_argument("--format", choices=FORMATS, help="output format (default table)")

    parser = argparse.ArgumentParser(prog="ecix", description="Eccentric connectivity index toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="per-vertex index report for graph6 input")
    p.add_argument("--g6", help="graph6 string (otherwise read lines from stdin)")
    p.set_defaults(func=cmd_compute)

    names = sorted(FAMILIES) + sorted(ALIASES)
    p = sub.add_parser("family", parents=[common], help="build a named family member")
    p.add_argument("--name", required=True, choices=names)
    p.add_argument("--n", type=int, required=True)
    for flag in ("p", "x", "d", "k", "i"):
        p.add_argument(f"--{flag}", type=int)
    p.set_defaults(func=cmd_family)

    def class_args(q: argparse.ArgumentParser) -> None:
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--pending", type=int)
        q.add_argument("--edges", type=int)
        q.add_argument("--dominating", default="any", choices=[d.value for d in Dominating])

    p = sub.add_parser("enumerate", parents=[common], help="connected graphs up to isomorphism, as graph6")
    class_args(p)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("extremal", parents=[common], help="exhaustive min or max index over a class")
    class_args(p)
    p.add_argument("--direction", choices=("min", "max"), default="min")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", parents=[common], help="check an extremal statement exhaustively")
    p.add_argument("--statement", required=True, choices=sorted(STATEMENTS))
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args, out)
    except (UsageError, GraphError, EmptyClassError, BudgetExceeded, ValueError, KeyError, OSError) as exc:
        print(f"ecix: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
