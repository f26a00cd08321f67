"""Command-line front end.

    knotrecon gen torus 2 3 | knotrecon bounds
    knotrecon invariants --format json < figure8.braid
    echo "[[1,5,2,4],[5,3,6,2],[3,1,4,6]]" | knotrecon plan

Input is a braid word (``<n> | <letters>``) or a PD code, read from a
file argument or standard input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, TextIO

from . import __version__
from .braids import BraidWord, braid_closure, format_braid_word, parse_braid_word, table_braid, torus_braid
from .diagram import LinkDiagram, diagram_stats, is_connected, parse_pd
from .errors import KnotError
from .invariants import alexander_polynomial, normalize_laurent, reconnection_bounds, signature
from .reconnection import POLICIES, apply_plan, cascade, plan_unknotting, search_reconnections, verify_unknot
from .seifert import seifert_genus, seifert_graph, seifert_matrix

SUBCOMMANDS = ("stats", "seifert", "invariants", "bounds", "plan", "cascade", "search", "gen")


class BraidRequired(KnotError, ValueError):
    kind = "BraidRequired"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for the random cascade policy")
    common.add_argument("--budget", type=int, default=None,
                        help="state budget for search, move budget for cascade")
    common.add_argument("--unknotting", type=int, default=None,
                        help="known unknotting number, used as an upper-bound certificate")
    common.add_argument("--policy", choices=POLICIES, default="planned")

    parser = argparse.ArgumentParser(prog="knotrecon", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS[:-1]:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("source", nargs="?", default="-", help="input file, '-' for stdin")
    gen = sub.add_parser("gen", parents=[common])
    gen.add_argument("family", choices=("torus", "table"))
    gen.add_argument("params", nargs="+")
    return parser


def _read_input(source: str, stdin: TextIO) -> tuple[LinkDiagram, Optional[BraidWord]]:
    if source == "-":
        text = stdin.read()
    else:
        with open(source) as fh:
            text = fh.read()
    text = text.strip()
    if "|" in text:
        b = parse_braid_word(text)
        return braid_closure(b), b
    return parse_pd(text), None


def _need_braid(b: Optional[BraidWord]) -> BraidWord:
    if b is None:
        raise BraidRequired("this command needs braid input ('<n> | <letters>')")
    return b


def run(args: argparse.Namespace, stdin: TextIO) -> dict:
    """Execute one request; returns the JSON-ready record."""
    if args.command == "gen":
        if args.family == "torus":
            if len(args.params) != 2:
                raise KnotError("gen torus takes two integers P Q")
            b = torus_braid(int(args.params[0]), int(args.params[1]))
        else:
            b = table_braid(args.params[0])
        return {"braid": format_braid_word(b), "strands": b.strands, "letters": list(b.letters)}

    d, b = _read_input(args.source, stdin)
    cmd = args.command
    if cmd == "stats":
        return diagram_stats(d).to_dict()
    if cmd == "seifert":
        out = {"s": seifert_graph(d).n_vertices,
               "graph": seifert_graph(d).to_dict(),
               "genus": seifert_genus(d).to_dict() if is_connected(d) else None}
        if b is not None:
            out["seifert_matrix"] = seifert_matrix(b).to_dict()
        return out
    if cmd == "invariants":
        m = seifert_matrix(_need_braid(b))
        alex = normalize_laurent(alexander_polynomial(m))
        return {"alexander": alex.to_dict(), "alexander_text": str(alex),
                "signature": signature(m), "seifert_matrix": m.to_dict()}
    if cmd == "bounds":
        return reconnection_bounds(d, b, args.unknotting).to_dict()
    if cmd == "plan":
        plan = plan_unknotting(d)
        trace = apply_plan(d, plan)
        return {"plan": plan.to_dict(), "trace": trace.to_dict(),
                "verdict": verify_unknot(trace.final).value}
    if cmd == "cascade":
        max_steps = args.budget if args.budget is not None else 10_000
        return cascade(d, args.policy, max_steps=max_steps, seed=args.seed).to_dict()
    if cmd == "search":
        budget = args.budget if args.budget is not None else 200_000
        n, trace = search_reconnections(d, budget)
        return {"minimum": n, "trace": trace.to_dict()}
    raise AssertionError(cmd)


def render_text(command: str, record: dict) -> str:
    if command == "gen":
        return record["braid"]
    if command == "invariants":
        return (f"alexander: {record['alexander_text']}\n"
                f"signature: {record['signature']}\n"
                f"seifert_matrix: {record['seifert_matrix']['entries']}")
    if command == "bounds":
        lines = [f"lower: {record['lower']}", f"upper: {record['upper']}"]
        if "exact" in record:
            lines.append(f"exact: {record['exact']}")
        for c in record["certificates"]:
            lines.append(f"  {c['role']:>5} {c['value']:>3}  {c['kind']}  {c['note']}".rstrip())
        return "\n".join(lines)
    if command in ("cascade", "search", "plan"):
        trace = record if command == "cascade" else record["trace"]
        lines = []
        if command == "plan":
            lines.append(f"keep: {record['plan']['keep']}")
            lines.append(f"smooth_order: {record['plan']['smooth_order']}")
        if command == "search":
            lines.append(f"minimum: {record['minimum']}")
        for i, s in enumerate(trace["steps"]):
            lines.append(f"  {i:>3} {s['kind']:<13} site={s['site']} mu={s['components_after']} "
                         f"c={s['crossings_after']} writhe={s['writhe_after']}")
        lines.append(f"total_reconnections: {trace['total_reconnections']}")
        lines.append(f"final: {trace['final']}")
        if command == "plan":
            lines.append(f"verdict: {record['verdict']}")
        return "\n".join(lines)
    return "\n".join(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}"
                     for k, v in record.items())


def main(argv=None, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None,
         stderr: Optional[TextIO] = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        record = run(args, stdin)
    except KnotError as exc:
        err = exc.to_dict()
        if args.format == "json":
            print(json.dumps(err, sort_keys=True), file=stdout)
        else:
            print(f"error: {err['error']}: {err['message']}", file=stderr)
        return 1
    except (OSError, ValueError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc), "site": None}
        if args.format == "json":
            print(json.dumps(err, sort_keys=True), file=stdout)
        else:
            print(f"error: {err['error']}: {err['message']}", file=stderr)
        return 1
    if args.format == "json":
        print(json.dumps(record, sort_keys=True, indent=2), file=stdout)
    else:
        print(render_text(args.command, record), file=stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
