"""Text rendering of index reports, extremal results and verification outcomes.

CSV layouts (LF line endings, header first):

* EciReport: ``vertex,degree,eccentricity,product``; last row ``total,,,<sum>``.
* ExtremalResult: ``class,direction,value,class_size,graph6``; one row per optimum.
* VerificationOutcome: ``record,statement,cell,class_size,value,graph6,expected,observed,verdict``
  where ``record`` is ``cell``, ``counterexample`` or ``summary``.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Union

from .extremal import ExtremalResult, VerificationOutcome
from .graph import EciReport
from .graph6 import encode_graph6

FORMATS = ("table", "csv", "json-lines")

Reportable = Union[EciReport, ExtremalResult, VerificationOutcome]


def _csv(rows: list[list[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _jsonl(objs: list[dict]) -> str:
    return "".join(json.dumps(o, sort_keys=False) + "\n" for o in objs)


def _table(header: list[str], rows: list[list[object]]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def emit_report(obj: Reportable, fmt: str = "table") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    if isinstance(obj, EciReport):
        return _eci(obj, fmt)
    if isinstance(obj, ExtremalResult):
        return _extremal(obj, fmt)
    if isinstance(obj, VerificationOutcome):
        return _outcome(obj, fmt)
    raise TypeError(f"cannot report {type(obj).__name__}")


def _eci(rep: EciReport, fmt: str) -> str:
    rows = [[r.vertex, r.degree, r.eccentricity, r.product] for r in rep.rows]
    if fmt == "csv":
        return _csv([["vertex", "degree", "eccentricity", "product"], *rows, ["total", "", "", rep.total]])
    if fmt == "json-lines":
        objs = [dict(zip(("vertex", "degree", "eccentricity", "product"), r)) for r in rows]
        return _jsonl(objs + [{"total": rep.total}])
    return _table(["vertex", "degree", "eccentricity", "product"], rows) + f"total {rep.total}\n"


def _extremal(res: ExtremalResult, fmt: str) -> str:
    label = res.filter.describe()
    g6s = [encode_graph6(g) for g in res.optima]
    if fmt == "csv":
        rows = [[label, res.direction.value, res.value, res.class_size, s] for s in g6s]
        return _csv([["class", "direction", "value", "class_size", "graph6"], *rows])
    if fmt == "json-lines":
        return _jsonl([{"class": label, "direction": res.direction.value, "value": res.value,
                        "class_size": res.class_size, "optima": g6s}])
    head = (f"class {label}: {res.direction.value} index {res.value} "
            f"over {res.class_size} graphs, {len(g6s)} optimal\n")
    return head + "".join(s + "\n" for s in g6s)


def _outcome(out: VerificationOutcome, fmt: str) -> str:
    rng = f"{out.n_min}..{out.n_max}"
    if fmt == "csv":
        rows: list[list[object]] = [["record", "statement", "cell", "class_size", "value", "graph6",
                                     "expected", "observed", "verdict"]]
        for c in out.cells:
            rows.append(["cell", out.statement, c.label, c.class_size, "" if c.value is None else c.value,
                         " ".join(c.optima), "", "", "ok" if c.ok else "mismatch"])
        for ce in out.counterexamples:
            rows.append(["counterexample", out.statement, ce.cell, "", "", ce.graph6, ce.expected, ce.observed, ""])
        rows.append(["summary", out.statement, rng, out.graphs_examined, "", "", "", "", out.verdict.value])
        return _csv(rows)
    if fmt == "json-lines":
        objs = [{"record": "cell", "statement": out.statement, "cell": c.label, "class_size": c.class_size,
                 "value": c.value, "optima": list(c.optima), "ok": c.ok} for c in out.cells]
        objs += [{"record": "counterexample", "statement": out.statement, "cell": ce.cell, "graph6": ce.graph6,
                  "expected": ce.expected, "observed": ce.observed} for ce in out.counterexamples]
        objs.append({"record": "summary", "statement": out.statement, "range": rng,
                     "verdict": out.verdict.value, "graphs_examined": out.graphs_examined,
                     "counterexamples": len(out.counterexamples)})
        return _jsonl(objs)
    rows = [[c.label, c.class_size, "-" if c.value is None else c.value, " ".join(c.optima) or "-",
             "ok" if c.ok else "MISMATCH"] for c in out.cells]
    text = f"{out.statement} over n={rng}: {out.verdict.value} " \
           f"({out.graphs_examined} graphs, {out.seconds:.1f} s)\n"
    text += _table(["cell", "graphs", "value", "optima", "status"], rows)
    if out.counterexamples:
        text += f"{len(out.counterexamples)} counterexample(s):\n"
        text += _table(["cell", "graph6", "expected", "observed"],
                       [[ce.cell, ce.graph6, ce.expected, ce.observed] for ce in out.counterexamples])
    return text
