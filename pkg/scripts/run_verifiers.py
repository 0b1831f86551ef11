"""Run every statement verifier over its default order range and print a summary.

    python scripts/run_verifiers.py              # orders up to 8
    python scripts/run_verifiers.py --with-9     # table and conjecture also at 9
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from ecix.extremal import STATEMENTS, verify


@dataclass(frozen=True)
class RunConfig:
    n_max: int = 8
    with_9: bool = False
    jobs: int = 1
    statements: tuple[str, ...] = field(default_factory=lambda: tuple(STATEMENTS))


def ranges(cfg: RunConfig):
    for name in cfg.statements:
        spec = STATEMENTS[name]
        lo = max(spec.min_n, 4)
        hi = cfg.n_max
        if cfg.with_9 and spec.max_default >= 9:
            hi = 9
        if name == "zd10-min":
            hi = min(hi, 7)  # the per-graph biconditional is the expensive part
        yield name, lo, hi


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--with-9", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("statements", nargs="*", help=f"subset of {sorted(STATEMENTS)}")
    a = ap.parse_args(argv)
    unknown = set(a.statements) - set(STATEMENTS)
    if unknown:
        ap.error(f"unknown statement(s): {sorted(unknown)}")
    cfg = RunConfig(a.n_max, a.with_9, a.jobs, tuple(a.statements) or tuple(STATEMENTS))
    worst = 0
    for name, lo, hi in ranges(cfg):
        out = verify(name, lo, hi, budget=max(hi, 8), jobs=cfg.jobs)
        print(f"{name:16s} n={lo}..{hi}  {out.verdict.value:18s} graphs={out.graphs_examined:<8d} {out.seconds:7.1f}s")
        for ce in out.counterexamples[:5]:
            print(f"    {ce.cell}: {ce.graph6} expected {ce.expected}, observed {ce.observed}")
        worst = max(worst, out.exit_code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
