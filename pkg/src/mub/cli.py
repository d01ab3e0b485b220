"""Command-line surface: generate, validate, recognize, scan, repair, render,
fixtures, and the exhaustive equivalence harness.

Exit codes: 0 success/SAT/clean, 1 UNSAT or negative result, 2 budget
exhausted, 3 forbidden hits found, 64 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bigraph import (
    GraphFormatError,
    contains_induced,
    enumerate_connected_bipartite,
    format_graph,
    induced_subgraph_search,
    parse_graph,
)
from .families import (
    FIXED_TAGS,
    ONE_PARAM_TAGS,
    TWO_PARAM_TAGS,
    FamilyId,
    UnsupportedConstructionError,
    forbidden_catalog,
    generate,
)
from .fixtures import FIXTURE_TAGS, VARIANTS, fixture
from .recognize import (
    min_bad_pair_representation,
    recognize_interval_closed,
    recognize_mixed_unit,
)
from .render import render_ascii, render_svg
from .repair import FailureReport, repair
from .representation import (
    format_representation,
    is_mixed_proper,
    is_mixed_unit,
    list_bad_pairs,
    parse_representation,
    validate,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BUDGET = 2
EXIT_HITS = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(EXIT_USAGE)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        sys.exit(EXIT_USAGE)


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except (GraphFormatError, ValueError) as e:
        sys.stderr.write(f"error: {path}: {e}\n")
        sys.exit(EXIT_USAGE)


def _load_rep(path: str):
    try:
        return parse_representation(_read(path))
    except ValueError as e:
        sys.stderr.write(f"error: {path}: {e}\n")
        sys.exit(EXIT_USAGE)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _default_budget_secs():
    raw = os.environ.get("MUB_BUDGET_SECS")
    return float(raw) if raw else None


def cmd_gen(args) -> int:
    try:
        fid = FamilyId(args.family, args.i, args.j, primed=args.primed, tilde=args.tilde)
        g = generate(fid)
    except (UnsupportedConstructionError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    _emit(format_graph(g), args.output)
    return EXIT_OK


def cmd_validate(args) -> int:
    g = _load_graph(args.graph)
    rep = _load_rep(args.rep)
    try:
        report = validate(g, rep)
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    print(f"valid: {report.valid}")
    print(f"mixed-unit: {is_mixed_unit(rep)}")
    print(f"mixed-proper: {is_mixed_proper(rep)}")
    for x, y in report.missing_edges:
        print(f"missing edge: {x} {y}")
    for x, y in report.spurious_edges:
        print(f"spurious intersection: {x} {y}")
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    out = recognize_mixed_unit(
        g,
        budget_nodes=args.budget_nodes,
        budget_secs=args.budget_secs,
        deterministic=args.deterministic,
    )
    print(f"status: {out.status}")
    print(f"nodes: {out.stats.nodes}")
    print(f"seconds: {out.stats.seconds:.3f}")
    if out.status == "SAT" and args.emit_rep:
        Path(args.emit_rep).write_text(format_representation(out.witness))
    if out.status == "SAT":
        return EXIT_OK
    if out.status == "UNSAT":
        return EXIT_NEGATIVE
    return EXIT_BUDGET


def cmd_scan(args) -> int:
    g = _load_graph(args.graph)
    hits = 0
    for entry in forbidden_catalog(len(g.vertices)):
        found = induced_subgraph_search(g, entry.graph, limit=1)
        if found:
            hits += 1
            emb = found[0]
            pairs = " ".join(f"{p}->{h}" for p, h in sorted(emb.mapping.items()))
            print(f"hit: {entry.fid} swapped={emb.side_swapped} {pairs}")
    if hits:
        print(f"hits: {hits}")
        return EXIT_HITS
    print("clean")
    return EXIT_OK


def cmd_repair(args) -> int:
    g = _load_graph(args.graph)
    rep = _load_rep(args.rep)
    trace: list = [] if args.trace else None
    result = repair(g, rep, trace)
    if args.trace and trace:
        for name, snapshot in trace:
            print(f"# {name}")
            sys.stdout.write(format_representation(snapshot))
    if isinstance(result, FailureReport):
        print(f"failure: {result.claim}: {result.message}")
        return EXIT_NEGATIVE
    _emit(format_representation(result), args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    rep = _load_rep(args.rep)
    text = render_ascii(rep) if args.format == "ascii" else render_svg(rep)
    _emit(text, args.output)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if args.action != "dump":
        sys.stderr.write("error: only `fixtures dump` is supported\n")
        return EXIT_USAGE
    try:
        g, rep = fixture(args.id, args.i, args.j, args.variant)
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    if args.output:
        Path(args.output + ".graph").write_text(format_graph(g))
        Path(args.output + ".rep").write_text(format_representation(rep))
    else:
        print("# graph")
        sys.stdout.write(format_graph(g))
        print("# representation")
        sys.stdout.write(format_representation(rep))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.max_n > args.safety_bound:
        sys.stderr.write(
            f"error: --max-n {args.max_n} exceeds the safety bound {args.safety_bound}\n"
        )
        return EXIT_USAGE
    catalog = forbidden_catalog(args.max_n)
    report_lines: list = []
    disagreements = budget_hits = repair_failures = total = 0
    ck_dir = Path(args.checkpoint) if args.checkpoint else None
    if ck_dir:
        ck_dir.mkdir(parents=True, exist_ok=True)
    for n in range(1, args.max_n + 1):
        ck_file = ck_dir / f"n{n}.json" if ck_dir else None
        if ck_file and ck_file.exists():
            data = json.loads(ck_file.read_text())
            report_lines.extend(data["lines"])
            disagreements += data["disagreements"]
            budget_hits += data["budget"]
            repair_failures += data["repair_failures"]
            total += data["total"]
            continue
        lines: list = []
        dis = bud = rf = cnt = 0
        for k, g in enumerate(enumerate_connected_bipartite(n)):
            if len(g.vertices) != n:
                continue
            cnt += 1
            out = recognize_mixed_unit(g, budget_secs=args.budget_secs)
            hit = any(contains_induced(g, e.graph) for e in catalog)
            interval = recognize_interval_closed(g) is not None
            if out.status == "BudgetExceeded":
                bud += 1
                lines.append(f"n={n} index={k} status=budget")
                continue
            expected_sat = interval and not hit
            agree = (out.status == "SAT") == expected_sat
            if not agree:
                dis += 1
            repair_note = "-"
            if out.status == "SAT" and interval:
                m = min_bad_pair_representation(g)
                result = repair(g, m)
                if isinstance(result, FailureReport):
                    rf += 1
                    repair_note = f"FAIL:{result.claim}"
                else:
                    repair_note = (
                        "proper" if is_mixed_proper(result) else "NOT-PROPER"
                    )
                    if repair_note != "proper":
                        rf += 1
            lines.append(
                f"n={n} index={k} status={out.status} scan={'hit' if hit else 'clean'} "
                f"interval={'yes' if interval else 'no'} agree={'yes' if agree else 'NO'} "
                f"repair={repair_note}"
            )
        if ck_file:
            ck_file.write_text(
                json.dumps(
                    {
                        "lines": lines,
                        "disagreements": dis,
                        "budget": bud,
                        "repair_failures": rf,
                        "total": cnt,
                    }
                )
            )
        report_lines.extend(lines)
        disagreements += dis
        budget_hits += bud
        repair_failures += rf
        total += cnt
    summary = (
        f"graphs={total} disagreements={disagreements} budget={budget_hits} "
        f"repair_failures={repair_failures}"
    )
    text = "\n".join(report_lines + [summary]) + "\n"
    if args.report:
        Path(args.report).write_text(text)
    sys.stdout.write(summary + "\n")
    return EXIT_OK if not (disagreements or budget_hits or repair_failures) else EXIT_NEGATIVE


def build_parser() -> _Parser:
    p = _Parser(prog="mub", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a catalog graph")
    g.add_argument("--family", required=True,
                   choices=sorted(FIXED_TAGS + ONE_PARAM_TAGS + TWO_PARAM_TAGS))
    g.add_argument("--i", type=int, default=None)
    g.add_argument("--j", type=int, default=None)
    g.add_argument("--primed", action="store_true")
    g.add_argument("--tilde", action="store_true")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("validate", help="check a representation against a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--rep", required=True)
    v.set_defaults(func=cmd_validate)

    r = sub.add_parser("recognize", help="search for a mixed unit representation")
    r.add_argument("--graph", required=True)
    r.add_argument("--emit-rep")
    r.add_argument("--budget-nodes", type=int, default=None)
    r.add_argument("--budget-secs", type=float, default=_default_budget_secs())
    r.add_argument("--deterministic", action="store_true", default=True)
    r.set_defaults(func=cmd_recognize)

    s = sub.add_parser("scan", help="report forbidden induced subgraphs")
    s.add_argument("--graph", required=True)
    s.set_defaults(func=cmd_scan)

    rp = sub.add_parser("repair", help="convert a closed representation to mixed proper")
    rp.add_argument("--graph", required=True)
    rp.add_argument("--rep", required=True)
    rp.add_argument("-o", "--output")
    rp.add_argument("--trace", action="store_true")
    rp.set_defaults(func=cmd_repair)

    rn = sub.add_parser("render", help="draw a representation")
    rn.add_argument("--rep", required=True)
    rn.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    rn.add_argument("-o", "--output")
    rn.set_defaults(func=cmd_render)

    f = sub.add_parser("fixtures", help="dump a pinned fixture")
    f.add_argument("action", choices=("dump",))
    f.add_argument("--id", required=True, choices=FIXTURE_TAGS)
    f.add_argument("--i", type=int, default=None)
    f.add_argument("--j", type=int, default=None)
    f.add_argument("--variant", choices=VARIANTS, default="closed")
    f.add_argument("-o", "--output")
    f.set_defaults(func=cmd_fixtures)

    e = sub.add_parser("enumerate", help="exhaustive equivalence harness")
    e.add_argument("--max-n", type=int, required=True)
    e.add_argument("--report")
    e.add_argument("--checkpoint")
    e.add_argument("--budget-secs", type=float, default=_default_budget_secs())
    e.add_argument("--safety-bound", type=int, default=8)
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
