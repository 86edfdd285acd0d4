"""``reslat`` command line interface.

Exit status: 0 success, 1 validation failure or negative predicate,
2 usage error, 3 time budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .algebra import ValidationError, are_isomorphic, classify
from .census import CLASSES, BudgetExceeded, catalog, census, format_tables, in_class
from .filters import all_filters, idempotent_generator
from .formats import AlgebraSyntaxError, catalog_record, export_dot, load_algebra
from .graphs import comaximal_filter_graph, graph_isomorphic, invariants, zero_divisor_graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _load(path):
    try:
        return load_algebra(path)
    except OSError as exc:
        raise _Fail(EXIT_USAGE, f"{path}: {exc.strerror or exc}")
    except AlgebraSyntaxError as exc:
        raise _Fail(EXIT_FAIL, f"{path}: {exc}")
    except ValidationError as exc:
        raise _Fail(EXIT_FAIL, f"{path}: not a residuated lattice\n{exc.report.format(exc.names)}")


def _graph(A, args):
    if args.kind == "comaximal":
        return comaximal_filter_graph(A)
    return zero_divisor_graph(A, nonzero_only=args.nonzero_only)


def _default_jobs():
    raw = os.environ.get("RESLAT_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _class_name(text):
    name = text.replace("-", "_").lower()
    if name not in CLASSES:
        raise argparse.ArgumentTypeError(f"unknown class {text!r}; choose from {', '.join(CLASSES)}")
    return name


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


# -- commands --------------------------------------------------------------------

def cmd_validate(args, out):
    A = _load(args.file)
    print(f"{args.file}: valid residuated lattice with {A.size} elements", file=out)
    return EXIT_OK


def cmd_classify(args, out):
    A = _load(args.file)
    for k, v in classify(A).as_dict().items():
        print(f"{k}: {'yes' if v else 'no'}", file=out)
    return EXIT_OK


def cmd_filters(args, out):
    A = _load(args.file)
    fl = all_filters(A)
    maxes = set(fl.maximal_indices)
    primes = set(fl.prime_indices)
    for i, F in enumerate(fl.all):
        tags = []
        if i in maxes:
            tags.append("maximal")
        if i in primes:
            tags.append("prime")
        if i == fl.radical_index:
            tags.append("radical")
        gen = A.names[idempotent_generator(A, F)]
        tail = f"  [{', '.join(tags)}]" if tags else ""
        print(f"F{i} = {F.format(A.names)}  generator {gen}{tail}", file=out)
    print(f"maximal filters: {len(maxes)}", file=out)
    print(f"radical: {fl.radical.format(A.names)}", file=out)
    return EXIT_OK


def cmd_graph(args, out):
    A = _load(args.file)
    G = _graph(A, args)
    if args.dot:
        _write(args.dot, export_dot(G, A))
        if args.dot == "-":
            return EXIT_OK
    print(f"{G.vertex_count} vertices, {G.edge_count} edges", file=out)
    for i in range(G.vertex_count):
        print(f"  v{i}: {G.label_text(i)}", file=out)
    for u, v in G.edges():
        print(f"  {G.label_text(u)} -- {G.label_text(v)}", file=out)
    return EXIT_OK


def cmd_invariants(args, out):
    A = _load(args.file)
    G = _graph(A, args)
    print(json.dumps(invariants(G).as_dict()), file=out)
    return EXIT_OK


def cmd_iso(args, out):
    A = _load(args.file1)
    B = _load(args.file2)
    if args.graphs:
        phi = graph_isomorphic(comaximal_filter_graph(A), comaximal_filter_graph(B))
        if phi is None:
            print("comaximal filter graphs are not isomorphic", file=out)
            return EXIT_FAIL
        print("comaximal filter graphs are isomorphic", file=out)
        for F, H in phi.items():
            print(f"  {F.format(A.names)} -> {H.format(B.names)}", file=out)
        return EXIT_OK
    phi = are_isomorphic(A, B)
    if phi is None:
        print("algebras are not isomorphic", file=out)
        return EXIT_FAIL
    print("algebras are isomorphic", file=out)
    print("  " + ", ".join(f"{A.names[i]}->{B.names[j]}" for i, j in enumerate(phi)), file=out)
    return EXIT_OK


def _deadline(budget):
    import time

    return None if budget is None else time.monotonic() + budget


def cmd_enumerate(args, out):
    try:
        rows = catalog(args.size, args.jobs, _deadline(args.budget), progress=sys.stderr if args.progress else None)
    except BudgetExceeded:
        print(f"budget exceeded: size {args.size} skipped", file=sys.stderr)
        return EXIT_BUDGET
    rows = [s for s in rows if in_class(s.flags, args.cls)]
    text = "".join(catalog_record(s) + "\n" for s in rows)
    if args.catalog:
        _write(args.catalog, text)
        print(f"{len(rows)} algebras of size {args.size} in class {args.cls}", file=out)
    else:
        out.write(text)
    return EXIT_OK


def cmd_census(args, out):
    chunks = []

    def sink(n, summaries):
        chunks.extend(catalog_record(s) + "\n" for s in summaries)

    code = EXIT_OK
    try:
        rows = census(args.max, args.jobs, args.budget, progress=sys.stderr if args.progress else None,
                      catalog_sink=sink)
        skipped = []
    except BudgetExceeded as exc:
        rows, skipped, code = exc.rows, exc.skipped, EXIT_BUDGET
    if rows:
        out.write(format_tables(rows))
    if skipped:
        print(f"skipped sizes (budget exceeded): {', '.join(map(str, skipped))}", file=out)
    if args.catalog:
        _write(args.catalog, "".join(chunks))
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="reslat", description="Finite residuated lattices, their filters and graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check that a file describes a residuated lattice")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("classify", help="print class memberships")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("filters", help="list filters, maximal filters and the radical")
    s.add_argument("file")
    s.set_defaults(func=cmd_filters)

    for name, fn, hlp in (("graph", cmd_graph, "print a graph or write it as DOT"),
                          ("invariants", cmd_invariants, "graph invariants as JSON")):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("file")
        s.add_argument("--kind", choices=("comaximal", "zerodiv"), default="comaximal")
        s.add_argument("--nonzero-only", action="store_true", help="drop 0 from the zero-divisor graph")
        if name == "graph":
            s.add_argument("--dot", metavar="OUT", help="write DOT to OUT ('-' for stdout)")
        s.set_defaults(func=fn)

    s = sub.add_parser("iso", help="algebra isomorphism, or graph isomorphism with --graphs")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--graphs", action="store_true", help="compare comaximal filter graphs instead")
    s.set_defaults(func=cmd_iso)

    jobs = _default_jobs()
    s = sub.add_parser("enumerate", help="catalog every algebra of one size")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--class", dest="cls", type=_class_name, default="all")
    s.add_argument("--jobs", type=int, default=jobs)
    s.add_argument("--catalog", metavar="OUT", help="write JSON lines to OUT instead of stdout")
    s.add_argument("--budget", type=float, metavar="SECONDS")
    s.add_argument("--progress", action="store_true", help="progress lines on stderr")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("census", help="count algebras and non-null graphs for sizes 1..N")
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--jobs", type=int, default=jobs)
    s.add_argument("--catalog", metavar="OUT", help="also write the JSON-lines catalog")
    s.add_argument("--budget", type=float, metavar="SECONDS")
    s.add_argument("--progress", action="store_true", help="progress lines on stderr")
    s.set_defaults(func=cmd_census)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for attr in ("size", "max", "jobs"):
        v = getattr(args, attr, None)
        if v is not None and v < 1:
            parser.print_usage(sys.stderr)
            print(f"reslat: error: --{attr} must be at least 1", file=sys.stderr)
            return EXIT_USAGE
    if getattr(args, "budget", None) is not None and args.budget < 0:
        print("reslat: error: --budget must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except _Fail as exc:
        print(str(exc), file=sys.stderr if exc.code == EXIT_USAGE else out)
        return exc.code


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
