"""Command-line front end.

Exit status: 0 on success, 1 on bad input or parameters, 2 when a
verification check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import verify as V
from .enumeration import EnumerationTask, enumerate_class, load_class
from .families import FamilySpec
from .graph_core import Graph, canonical_form, from_graph6, from_json
from .moments import closed_walk_counts, s_order_compare, s_order_sort
from .walk_expansion import get_catalog

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2

# Short names for the checks, after the numbering of the results they test.
ALIASES: dict[str, str] = {
    "theorem3.1": "turan-extremal",
    "theorem3.2": "last-segment",
    "theorem3.3": "last-segment",
    "theorem3.4": "minimal-class",
    "theorem3.5": "first-segment",
    "theorem4.2": "lollipop-first",
    "theorem4.3": "last-segment-chromatic",
    "theorem4.4": "last-segment-chromatic",
    "lemma2.4": "path-shift",
    "lemma2.5": "coalescence",
    "lemma4.2": "edge-bound",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which is reserved for failed checks
        raise UsageError(message)


def parse_graph_input(g6: str | None = None, json_text: str | None = None, family: str | None = None) -> Graph:
    """Decode exactly one of a graph6 string, a JSON object or a family spec."""
    given = [x for x in (g6, json_text, family) if x is not None]
    if len(given) != 1:
        raise ValueError("give exactly one of --g6, --json, --family")
    if g6 is not None:
        return from_graph6(g6)
    if json_text is not None:
        try:
            return from_json(json_text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed JSON graph: {exc}") from None
    return FamilySpec.parse(family).build()


def _graph_arg(text: str) -> Graph:
    """graph6, or a family spec (graph6 never contains ':')."""
    return FamilySpec.parse(text).build() if ":" in text else from_graph6(text)


# output helpers -----------------------------------------------------------------


def _emit(out, fmt: str, obj, rows: list[list] | None = None, header: list[str] | None = None) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
        return
    if rows is None:
        rows = [[k, json.dumps(v) if isinstance(v, (list, dict)) else v] for k, v in obj.items()]
        header = header or ["key", "value"]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if header:
            writer.writerow(header)
        writer.writerows(rows)
        out.write(buf.getvalue())
        return
    table = ([header] if header else []) + [[str(c) for c in r] for r in rows]
    widths = [max(len(str(r[i])) for r in table) for i in range(len(table[0]))] if table else []
    for r in table:
        out.write("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


# subcommands --------------------------------------------------------------------


def cmd_moments(args, out) -> int:
    g = parse_graph_input(args.g6, args.json, args.family)
    kmax = g.n - 1 if args.kmax is None else args.kmax
    if kmax < 0:
        raise ValueError("--kmax must be nonnegative")
    values = [str(v) for v in closed_walk_counts(g, kmax)]
    obj = {"n": g.n, "moments": values}
    _emit(out, args.format, obj, [[k, v] for k, v in enumerate(values)], ["k", "moment"])
    return EXIT_OK


def cmd_compare(args, out) -> int:
    res = s_order_compare(_graph_arg(args.a), _graph_arg(args.b))
    obj = {"outcome": res.order.value}
    if res.index is not None:
        obj["index"] = res.index
    _emit(out, args.format, obj)
    return EXIT_OK


def _read_graph_lines(source: str) -> list[Graph]:
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="ascii")
    return [from_graph6(line) for line in text.splitlines() if line.strip()]


def cmd_sort(args, out) -> int:
    if args.input is not None:
        graphs = _read_graph_lines(args.input)
    else:
        if args.n is None or (args.clique is None) == (args.chromatic is None):
            raise ValueError("give --input, or --n with exactly one of --clique/--chromatic")
        kind, value = (V.CLIQUE, args.clique) if args.clique is not None else (V.CHROMATIC, args.chromatic)
        graphs = V.class_graphs(args.n, kind, value, cache_dir=args.cache_dir, jobs=args.jobs, expensive=args.expensive)
    if not graphs:
        raise ValueError("nothing to sort")
    groups = [[canonical_form(g) for g in grp] for grp in s_order_sort(graphs)]
    total = len(groups)
    if args.head is not None or args.tail is not None:
        head = groups[: args.head or 0]
        tail = groups[total - args.tail:] if args.tail else []
        groups = head + tail
    obj = {"n": graphs[0].n, "count": len(graphs), "group_count": total, "groups": groups}
    rows = [[i, " ".join(grp)] for i, grp in enumerate(groups)]
    _emit(out, args.format, obj, rows, ["group", "graph6"])
    return EXIT_OK


def cmd_family(args, out) -> int:
    spec = FamilySpec.parse(args.spec)
    g = spec.build()
    obj = {
        "family": str(spec),
        "n": g.n,
        "edges": [list(e) for e in g.edges()],
        "g6": g.to_graph6(),
        "canonical": canonical_form(g),
    }
    _emit(out, args.format, obj)
    return EXIT_OK


def cmd_coeffs(args, out) -> int:
    catalog = get_catalog(args.k, args.cache_dir)
    obj = catalog.to_json()
    rows = [[e["g6"], e["coeff"]] for e in obj["entries"]]
    _emit(out, args.format, obj, rows, ["g6", "coeff"])
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    task = EnumerationTask(args.n, clique=args.clique, chromatic=args.chromatic, edges=args.edges)
    if args.cache_dir:
        graphs = load_class(task, args.cache_dir, jobs=args.jobs, expensive=args.expensive)
    else:
        graphs = list(enumerate_class(task, jobs=args.jobs, expensive=args.expensive))
    obj = {"task": task.key(), "n": task.n, "count": len(graphs)}
    if args.cache_dir:
        obj["path"] = str(Path(args.cache_dir) / f"{task.key()}.g6")
    if args.graphs:
        obj["graphs"] = [g.to_graph6() for g in graphs]
    _emit(out, args.format, obj)
    return EXIT_OK


def _resolve_check(name: str, n: int | None, t: int | None) -> str:
    name = name.lower()
    if name == "theorem4.5":
        if n is None or t is None:
            raise ValueError("this check needs --n and --t")
        return "minimal-class-chromatic" if t in (n - 2, n - 3) else "first-segment-chromatic"
    name = ALIASES.get(name, name)
    if name not in V.CHECKS and name != "identities":
        known = sorted(set(V.CHECKS) | set(ALIASES) | {"identities", "theorem4.5"})
        raise ValueError(f"unknown check {name!r}; known: {', '.join(known)}")
    return name


def run_check(name: str, args) -> list[V.VerificationReport]:
    check = _resolve_check(name, args.n, args.t)
    if check == "identities":
        return V.verify_difference_identities()
    if check in ("path-shift", "coalescence"):
        seed = V.DEFAULT_SEED if args.seed is None else args.seed
        return [V.CHECKS[check](trials=args.trials, seed=seed)]
    fn = V.CHECKS[check]
    if check == "lollipop-first":
        if args.n is None:
            raise ValueError("this check needs --n")
        return [fn(args.n, cache_dir=args.cache_dir, jobs=args.jobs, expensive=args.expensive)]
    if args.n is None or args.t is None:
        raise ValueError("this check needs --n and --t")
    if check == "turan-extremal":
        return [fn(args.n, args.t, jobs=args.jobs)]
    return [fn(args.n, args.t, cache_dir=args.cache_dir, jobs=args.jobs, expensive=args.expensive)]


def cmd_verify(args, out) -> int:
    reports = run_check(args.check, args)
    ordered = sorted(reports, key=V.VerificationReport.sort_key)
    counts = {s.value: sum(r.status is s for r in ordered) for s in V.Status}
    if args.format == "json":
        out.write(json.dumps({"reports": [r.to_dict() for r in ordered], "summary": counts}, indent=2) + "\n")
    elif args.format == "csv":
        out.write(V.reports_to_csv(ordered))
    else:
        rows = [[r.theorem, ";".join(f"{k}={v}" for k, v in sorted(r.parameters.items())), r.status.value] for r in ordered]
        _emit(out, "table", {}, rows, ["check", "parameters", "status"])
    return EXIT_VERIFY if counts[V.Status.FAIL.value] else EXIT_OK


# parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="json")
    common.add_argument("--cache-dir", default="catalogs", help="catalog directory (default ./catalogs); '' disables caching")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--expensive", action="store_true", help="allow n = 10 enumeration")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="sorder", description="Spectral moments and S-order of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_inputs(p):
        p.add_argument("--g6")
        p.add_argument("--json")
        p.add_argument("--family")

    p = sub.add_parser("moments", parents=[common], help="closed-walk counts S_0..S_{n-1}")
    graph_inputs(p)
    p.add_argument("--kmax", type=int, help="last moment index (default n-1)")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("compare", parents=[common], help="S-order comparison of two graphs")
    p.add_argument("--a", required=True, help="graph6 or family spec")
    p.add_argument("--b", required=True, help="graph6 or family spec")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sort", parents=[common], help="sort graphs into S-order groups")
    p.add_argument("--input", help="file of graph6 lines, '-' for stdin")
    p.add_argument("--n", type=int)
    p.add_argument("--clique", type=int)
    p.add_argument("--chromatic", type=int)
    p.add_argument("--head", type=int)
    p.add_argument("--tail", type=int)
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("family", parents=[common], help="build a named graph, e.g. kite:n=8,t=4")
    p.add_argument("spec")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("coeffs", parents=[common], help="walk-expansion coefficients for length k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("enumerate", parents=[common], help="connected graphs on n vertices, filtered")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--clique", type=int)
    p.add_argument("--chromatic", type=int)
    p.add_argument("--edges", type=int)
    p.add_argument("--graphs", action="store_true", help="include the graph6 list in the output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive or randomized check")
    p.add_argument("check", help="check id or alias, or 'identities'")
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"sorder: {exc}\n")
        return EXIT_DOMAIN
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    if args.jobs < 1:
        err.write("sorder: --jobs must be >= 1\n")
        return EXIT_DOMAIN
    args.cache_dir = args.cache_dir or None
    try:
        return args.func(args, out)
    except (ValueError, OSError) as exc:
        err.write(f"sorder: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())
