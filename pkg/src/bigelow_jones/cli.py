"""Command-line front end.

Exit status: 0 success, 2 bad input, 3 geometry fault, 4 oracle mismatch,
5 violated grading identity.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, TextIO

from .braid import format_braid, parse_braid
from .errors import BigelowError, InputError, OracleMismatch, ReducedConditionError
from .gradings import GradingRecord, format_table
from .kauffman_oracle import kauffman_jones
from .pipeline import Analysis, analyze
from .plane_diagram import render_svg


@dataclass(frozen=True)
class RunConfig:
    braid: str
    strands: int
    format: str = "table"
    reduced: bool = False
    oracle_check: bool = False
    emit_svg: str | None = None
    emit_gradings: bool = False
    list_generators: bool = False


def half_text(two_r: int) -> str:
    r = Fraction(two_r, 2)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/2"


def report(a: Analysis, reduced: bool = False, oracle=None) -> dict:
    doc = {
        "braid": format_braid(a.braid),
        "strands": a.braid.strands,
        "m": a.m,
        "w": a.w,
        "generators": [r.as_dict() for r in a.records],
        "jones_q": a.jones_q.q_text(),
        "jones_t": a.jones_t.t_text(),
        "corollary_t": a.corollary_t.t_text(),
    }
    if reduced:
        try:
            doc["reduced_t"] = a.reduced_t().t_text()
        except ReducedConditionError:
            doc["reduced_t"] = None
    if oracle is not None:
        doc["oracle_t"] = oracle.t_text()
    return doc


def _table(records: Sequence[GradingRecord]) -> str:
    head = f"{'generator':<12}{'Q':>5}{'T':>5}{'J':>5}{'Ptilde':>8}{'P':>5}{'R':>7}{'sign':>6}"
    rows = [head]
    for r in records:
        rows.append(
            f"{r.label:<12}{r.Q:>5}{r.T:>5}{r.J:>5}{r.P_tilde:>8}{r.P:>5}"
            f"{half_text(r.two_R):>7}{'+' if r.sign > 0 else '-':>6}"
        )
    return "\n".join(rows)


def run(cfg: RunConfig, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    if cfg.format not in ("table", "json", "poly"):
        raise InputError(f"unknown format {cfg.format!r}")
    b = parse_braid(cfg.braid, cfg.strands)
    a = analyze(b)
    oracle = kauffman_jones(b) if cfg.oracle_check else None
    doc = report(a, cfg.reduced, oracle)

    if cfg.emit_svg:
        with open(cfg.emit_svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(a.diagram))

    lines = []
    if cfg.list_generators:
        lines.append(f"{len(a.generators)} generators")
        lines.extend(g.compact_label for g in a.generators)
    if cfg.emit_gradings:
        for field in ("Q", "T", "J", "P", "two_R"):
            lines.append(format_table(a.records, field))
            lines.append("")
    if cfg.format == "json":
        lines.append(json.dumps(doc, indent=2))
    else:
        if cfg.format == "table":
            lines.append(f"braid: {doc['braid'] or '(empty)'} on {b.strands} strand{'s' if b.strands > 1 else ''}, m = {a.m}, w = {a.w}")
            lines.append(_table(a.records))
        lines.append(f"J_L = {doc['jones_q']}")
        lines.append(f"V_L = {doc['jones_t']}")
        if cfg.format == "table":
            lines.append(f"V_L (P, R form) = {doc['corollary_t']}")
        if cfg.reduced:
            lines.append(f"V_L (reduced) = {doc['reduced_t'] or 'unavailable: no clear ray from mu_2m'}")
        if oracle is not None:
            lines.append(f"V_L (Kauffman) = {doc['oracle_t']}")
    out.write("\n".join(lines) + "\n")

    if oracle is not None:
        mismatched = [k for k in ("jones_t", "corollary_t", "reduced_t") if doc.get(k) is not None and doc[k] != doc["oracle_t"]]
        if mismatched:
            raise OracleMismatch("oracle disagrees with " + ", ".join(mismatched))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bigelow-jones", description="Jones polynomial of a braid closure from graded Bigelow generators.")
    p.add_argument("--braid", required=True, help='signed letters, e.g. "-1 -1 -1"; empty for the identity')
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--format", choices=("table", "json", "poly"), default="table")
    p.add_argument("--reduced", action="store_true", help="also compute V_L from the reduced generators")
    p.add_argument("--oracle-check", action="store_true", help="compare against the Kauffman bracket state sum")
    p.add_argument("--emit-svg", metavar="PATH", help="write the flattened diagram as SVG")
    p.add_argument("--emit-gradings", action="store_true", help="print the Q, T, J, P and 2R tables")
    p.add_argument("--list-generators", action="store_true")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        braid=args.braid, strands=args.strands, format=args.format, reduced=args.reduced,
        oracle_check=args.oracle_check, emit_svg=args.emit_svg,
        emit_gradings=args.emit_gradings, list_generators=args.list_generators,
    )
    try:
        return run(cfg)
    except BigelowError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
