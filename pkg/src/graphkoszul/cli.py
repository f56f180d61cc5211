"""Command-line driver.

Exit codes: 0 all checks pass, 1 a mathematical check failed (or a formula
was refused for a graph outside its class), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import verify
from .graphs import (
    FAMILIES,
    Graph,
    GraphError,
    from_graph6,
    has_overlapping_triangles,
    is_triangle_free,
    named_family,
    read_edge_list,
    triangles,
)
from .groebner import complete, dim_vector, dump as dump_gb
from .matchings import ClassViolation, hilbert_formula
from .presentations import b_presentation, q_presentation, quadratic_dual
from .series import IntSeries, invert_trunc

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2
MAX_DEGREE = 10


class UsageError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=FAMILIES, help="named graph family")
    src.add_argument("--edges", metavar="PATH", help="edge-list file")
    src.add_argument("--graph6", metavar="STRING", help="graph6 string")
    p.add_argument("--n", type=int, help="vertex count for --family")
    p.add_argument("--json", action="store_true", help="print a JSON report")


def load_graph(args) -> tuple[Graph, str | None]:
    if args.family:
        return named_family(args.family, args.n), args.family
    if args.n is not None:
        raise UsageError("--n only applies to --family")
    if args.edges:
        try:
            return read_edge_list(args.edges), None
        except OSError as exc:
            raise UsageError(f"cannot read {args.edges}: {exc.strerror}") from None
    return from_graph6(args.graph6), None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _header(g: Graph, family: str | None) -> dict:
    return {
        "schema_version": verify.SCHEMA_VERSION,
        "graph": verify.graph_descriptor(g, family),
        "flags": verify.class_flags(g),
    }


def cmd_info(args) -> int:
    g, family = load_graph(args)
    tris = triangles(g)
    payload = _header(g, family) | {"edge_count": len(g.edges), "triangles": [list(t) for t in tris]}
    lines = [
        f"n = {g.n}",
        f"|E| = {len(g.edges)}",
        "edges: " + (" ".join(f"({i},{j})" for i, j in g.sorted_edges) or "none"),
        "triangles: " + (" ".join(f"({a},{b},{c})" for a, b, c in tris) or "none"),
        f"triangle_free = {str(is_triangle_free(g)).lower()}",
        f"overlap_free = {str(not has_overlapping_triangles(g)).lower()}",
    ]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _presentation(g: Graph, algebra: str):
    if algebra == "q":
        return q_presentation(g)
    if algebra == "b":
        return b_presentation(g)
    if algebra == "qdual":
        return quadratic_dual(q_presentation(g))
    return quadratic_dual(b_presentation(g))


def _gb_series(g: Graph, algebra: str, D: int) -> IntSeries:
    return IntSeries(dim_vector(complete(_presentation(g, algebra), bound=max(D, 2)), D).dims)


PARTNER = {"q": "qdual", "b": "bdual", "qdual": "q", "bdual": "b"}
LABEL = {"q": "Q", "b": "B", "qdual": "Q!", "bdual": "B!"}


def cmd_hilbert(args) -> int:
    g, family = load_graph(args)
    algebra, method = args.algebra, args.method
    dual = algebra.endswith("dual")
    D = args.degree if args.degree is not None else (g.n if dual else verify.default_q_degree(g.n))
    if D < 0:
        raise UsageError("--degree must be non-negative")
    if D > MAX_DEGREE:
        print(f"error: degree {D} exceeds the budget of {MAX_DEGREE}", file=sys.stderr)
        return EXIT_USAGE
    in_class = not has_overlapping_triangles(g)
    checks = []
    if method in ("formula", "inversion") and not in_class and not args.force:
        print(
            f"error: class violation: {g.describe()} has two triangles with a common vertex "
            "(use --force to evaluate anyway)",
            file=sys.stderr,
        )
        return EXIT_CHECK_FAILED
    if method == "gb":
        series = _gb_series(g, algebra, D)
    elif method == "formula":
        p = hilbert_formula(g, force=True).truncate(D)
        series = p if dual else invert_trunc(p.negate_variable())
    else:
        partner = _gb_series(g, PARTNER[algebra], D)
        series = invert_trunc(partner.negate_variable())
    if method != "gb" and args.force and not in_class:
        reference = _gb_series(g, algebra, D)
        checks.append({
            "name": "forced-agreement", "methods": f"{method} vs gb", "degrees": f"0..{D}",
            "passed": reference == series, "gb": list(reference.coeffs),
        })
    payload = _header(g, family) | {
        "algebra": algebra, "method": method, "degree": D,
        "series": list(series.coeffs), "checks": checks,
    }
    lines = [f"{LABEL[algebra]}(z) = {series} + O(z^{D + 1})", "coefficients: " + ",".join(map(str, series.coeffs))]
    for c in checks:
        verdict = "agree" if c["passed"] else "disagree"
        lines.append(f"{c['methods']} ({c['degrees']}): {verdict}; gb = {','.join(map(str, c['gb']))}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_dump(args) -> int:
    g, _ = load_graph(args)
    pres = _presentation(g, args.algebra)
    if args.gb:
        D = args.degree if args.degree is not None else g.n + 1
        if D > MAX_DEGREE:
            print(f"error: degree {D} exceeds the budget of {MAX_DEGREE}", file=sys.stderr)
            return EXIT_USAGE
        gb = complete(pres, bound=D)
        sys.stdout.write(dump_gb(gb))
        print("dims: " + str(dim_vector(gb, D)))
    else:
        sys.stdout.write(pres.dump())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.degree_budget is not None:
        os.environ[verify.BUDGET_ENV] = str(args.degree_budget)
    rows = verify.run_suite(args.suite, args.max_n)
    report = verify.report(args.suite, rows, args.max_n)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        by_check: dict[str, list] = {}
        for r in rows:
            by_check.setdefault(r.check, []).append(r)
        for check, group in by_check.items():
            bad = [r for r in group if not r.passed]
            status = "PASS" if not bad else "FAIL"
            print(f"{status} {check}: {len(group) - len(bad)}/{len(group)} graphs [{group[0].methods}]")
            for r in bad:
                print(f"    {r.graph.describe()} degrees {r.degrees}: {json.dumps(r.details, sort_keys=True)}")
        s = report["summary"]
        print(f"total {s['total']}, passed {s['passed']}, failed {s['failed']}")
    return EXIT_OK if report["summary"]["failed"] == 0 else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphkoszul", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="vertex/edge counts, triangles and class flags")
    _add_source(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("hilbert", help="truncated Hilbert series of Q, B or their duals")
    _add_source(p)
    p.add_argument("--algebra", choices=("q", "b", "qdual", "bdual"), default="bdual")
    p.add_argument("--method", choices=("gb", "formula", "inversion"), default="gb")
    p.add_argument("--degree", type=int)
    p.add_argument("--force", action="store_true", help="evaluate formulas outside their class")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("dump", help="print a presentation or its truncated Groebner basis")
    _add_source(p)
    p.add_argument("--algebra", choices=("q", "b", "qdual", "bdual"), default="q")
    p.add_argument("--gb", action="store_true")
    p.add_argument("--degree", type=int)
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("verify", help="run a verification suite over the small-graph census")
    p.add_argument("suite", choices=verify.SUITES + ("all",))
    p.add_argument("--max-n", type=int)
    p.add_argument("--degree-budget", type=int, help=f"override truncation degrees (also ${verify.BUDGET_ENV})")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", metavar="PATH", help="also write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ClassViolation as exc:
        print(f"error: class violation: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
