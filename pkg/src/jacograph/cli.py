"""Command-line front end: table, edges, crosscheck, export, zeck, bench.

Exit codes: 0 success/agreement, 1 usage or refusal, 2 disagreement or
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from time import perf_counter

from . import fisher, oracle, reconstruction, zeckendorf

OK = 0
USAGE = 1
DISAGREE = 2

FORMAT_VERSION = 1
METHODS = ("oracle", "fisher", "zeckendorf", "reconstruction")

# The counting oracle is quadratic by design; refuse past this without --force.
ORACLE_BOUND = 100_000
EXPORT_BOUND = 100_000


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("vertices are indexed from 1")
    return value


def _header(kind: str) -> str:
    return f"# jacograph {kind} v{FORMAT_VERSION}"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n" if text else "", encoding="utf-8")
    elif text:
        print(text)


def _edges_by(method: str, n: int) -> int:
    if method == "oracle":
        return oracle.edge_count_oracle(oracle.build_jaco(n))
    if method == "fisher":
        return fisher.edges_recursive(n)
    if method == "zeckendorf":
        return zeckendorf.edges_zeckendorf(n)
    return reconstruction.edges_reconstruction(n)


@dataclass
class EdgeCountReport:
    n: int
    results: dict[str, int] = field(default_factory=dict)
    elapsed: dict[str, float] = field(default_factory=dict)
    skipped: dict[str, str] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len(set(self.results.values())) <= 1

    def run(self, methods) -> "EdgeCountReport":
        for method in methods:
            start = perf_counter()
            self.results[method] = _edges_by(method, self.n)
            self.elapsed[method] = perf_counter() - start
        return self

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "results": dict(self.results),
            "elapsed_s": {k: round(v, 6) for k, v in self.elapsed.items()},
            "skipped": dict(self.skipped),
            "agree": self.agree,
        }

    def text_lines(self) -> list[str]:
        lines = [f"n={self.n}"]
        for method, value in self.results.items():
            lines.append(f"  {method:<16} {value}  [{self.elapsed[method]:.6f}s]")
        for method, why in self.skipped.items():
            lines.append(f"  {method:<16} skipped: {why}")
        lines.append(f"  agree {'yes' if self.agree else 'NO'}")
        return lines


def _select_methods(requested: str, n: int, force: bool) -> tuple[list[str], dict[str, str]]:
    methods = list(METHODS) if requested == "all" else [requested]
    skipped: dict[str, str] = {}
    if "oracle" in methods and n > ORACLE_BOUND and not force:
        methods.remove("oracle")
        skipped["oracle"] = f"quadratic oracle bounded to n <= {ORACLE_BOUND} (override with --force)"
    return methods, skipped


def cmd_table(args) -> int:
    rows = fisher.fisher_table(args.n)
    if args.format == "csv":
        body = fisher.rows_to_csv(rows)
    else:
        names = ("i", "in_degree", "out_degree", "delta", "edges")
        widths = [max(len(name), len(str(rows[-1][pos]))) for pos, name in enumerate(names)]
        header_line = "  ".join(name.rjust(w) for name, w in zip(names, widths))
        body_lines = [header_line]
        for row in rows:
            body_lines.append("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))
        body = "\n".join(body_lines)
    text = body if args.bare else f"{_header('table')}\n{body}"
    _emit(text, args.out)
    return OK


def cmd_edges(args) -> int:
    if args.method == "oracle" and args.n > ORACLE_BOUND and not args.force:
        print(
            f"error: the oracle rebuilds the graph in quadratic time and is bounded "
            f"to n <= {ORACLE_BOUND}; use --force to run it anyway, or pick "
            f"--method fisher/zeckendorf/reconstruction",
            file=sys.stderr,
        )
        return USAGE
    methods, skipped = _select_methods(args.method, args.n, args.force)
    report = EdgeCountReport(args.n, skipped=skipped).run(methods)
    if args.json:
        text = json.dumps({"format_version": FORMAT_VERSION, **report.as_dict()})
    elif args.method == "all":
        lines = [] if args.bare else [_header("edges")]
        lines.extend(report.text_lines())
        text = "\n".join(lines)
    else:
        value = str(report.results[args.method])
        text = value if args.bare else f"{_header('edges')}\n{value}"
    _emit(text, args.out)
    return OK if report.agree else DISAGREE


def cmd_crosscheck(args) -> int:
    lo, hi = args.lo, args.hi
    if lo > hi:
        print(f"error: empty range {lo}..{hi}", file=sys.stderr)
        return USAGE

    oracle_hi = hi if args.force else min(hi, ORACLE_BOUND)
    oracle_counts = None
    if lo <= oracle_hi:
        # In-degrees never look past their own vertex, so one build serves
        # every prefix size via running sums.
        g = oracle.build_jaco(oracle_hi)
        counts = []
        running = 0
        for d in g.in_deg:
            running += d
            counts.append(running)
        oracle_counts = counts
    fisher_counts = fisher.edge_count_prefix(hi)

    out_degree_sum = 0
    for i in range(2, lo):
        out_degree_sum += zeckendorf.bettina_out_degree(i)
    for n in range(lo, hi + 1):
        if n >= 2:
            out_degree_sum += zeckendorf.bettina_out_degree(n)
        values = {
            "fisher": fisher_counts[n - 1],
            "zeckendorf": n * (n + 1) // 2 - 1 - out_degree_sum if n >= 2 else 0,
            "reconstruction": reconstruction.edges_reconstruction(n),
        }
        if oracle_counts is not None and n <= oracle_hi:
            values["oracle"] = oracle_counts[n - 1]
        if len(set(values.values())) > 1:
            detail = ", ".join(f"{k}={v}" for k, v in sorted(values.items()))
            text = f"DISAGREE at n={n}: {detail}"
            _emit(text if args.bare else f"{_header('crosscheck')}\n{text}", args.out)
            return DISAGREE

    checked = "oracle,fisher,zeckendorf,reconstruction" if oracle_counts else "fisher,zeckendorf,reconstruction"
    if oracle_counts is not None and oracle_hi < hi:
        checked = f"oracle(<= {oracle_hi}),fisher,zeckendorf,reconstruction"
    text = f"OK {lo}..{hi} {checked}"
    _emit(text if args.bare else f"{_header('crosscheck')}\n{text}", args.out)
    return OK


def cmd_export(args) -> int:
    if args.n > EXPORT_BOUND and not args.force:
        print(
            f"error: export materializes the arc set and is bounded to "
            f"n <= {EXPORT_BOUND}; use --force to override",
            file=sys.stderr,
        )
        return USAGE
    g = oracle.build_jaco(args.n)
    if args.format == "edgelist":
        body = oracle.to_edge_list(g)
        text = body if args.bare else (f"{_header('edgelist')}\n{body}" if body else _header("edgelist"))
    else:
        body = oracle.to_dot(g)
        text = body if args.bare else f"// jacograph dot v{FORMAT_VERSION}\n{body}"
    _emit(text, args.out)
    return OK


def cmd_zeck(args) -> int:
    z = zeckendorf.zeckendorf_decompose(args.n)
    lines = [] if args.bare else [_header("zeck")]
    lines.append(zeckendorf.format_decomposition(z))
    lines.append(f"out_degree {zeckendorf.bettina_out_degree(args.n)}")
    lines.append(f"in_degree {zeckendorf.in_degree_bettina(args.n)}")
    _emit("\n".join(lines), args.out)
    return OK


def cmd_bench(args) -> int:
    reports = []
    for n in args.ns:
        methods, skipped = _select_methods("all", n, args.force)
        reports.append(EdgeCountReport(n, skipped=skipped).run(methods))
    all_agree = all(r.agree for r in reports)
    if args.json:
        text = json.dumps(
            {"format_version": FORMAT_VERSION, "runs": [r.as_dict() for r in reports]}
        )
    else:
        lines = [] if args.bare else [_header("bench")]
        for report in reports:
            lines.extend(report.text_lines())
        if not reports:
            lines.append("no runs")
        text = "\n".join(lines)
    _emit(text, args.out)
    return OK if all_agree else DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jaco", description="Finite Jaco graph J_n(1) toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, json_flag=False):
        if json_flag:
            p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--bare", action="store_true", help="suppress the format-version header line")
        p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    p = sub.add_parser("table", help="emit the degree/edge table for rows 1..n")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--format", choices=("csv", "pretty"), default="csv")
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("edges", help="edge count of J_n(1) by one or all methods")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.add_argument("--force", action="store_true", help="lift the quadratic-oracle size bound")
    common(p, json_flag=True)
    p.set_defaults(func=cmd_edges)

    p = sub.add_parser("crosscheck", help="compare all feasible methods over a range of n")
    p.add_argument("lo", type=_positive_int)
    p.add_argument("hi", type=_positive_int)
    p.add_argument("--force", action="store_true", help="lift the quadratic-oracle size bound")
    common(p)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("export", help="write the arc set as an edge list or DOT digraph")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    p.add_argument("--force", action="store_true", help="lift the export size bound")
    common(p)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("zeck", help="Zeckendorf form of n plus the degree pair it induces")
    p.add_argument("n", type=_positive_int)
    common(p)
    p.set_defaults(func=cmd_zeck)

    p = sub.add_parser("bench", help="time every feasible method at each given n")
    p.add_argument("ns", metavar="n", type=_positive_int, nargs="*")
    p.add_argument("--force", action="store_true", help="lift the quadratic-oracle size bound")
    common(p, json_flag=True)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DISAGREE


if __name__ == "__main__":
    sys.exit(main())
