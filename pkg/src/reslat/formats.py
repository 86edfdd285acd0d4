"""Algebra text files, JSON-lines catalog records and DOT export.

Algebra file grammar (``#`` starts a comment, blank lines are ignored)::

    size N
    elements NAME_0 ... NAME_{N-1}      # optional, bottom first, top last
    order                               # N rows of N 0/1 entries: x <= y
    ...
    mult                                # N rows of N element names
    ...
    impl                                # optional, same shape as mult
    ...
"""

from __future__ import annotations

import json
import math
from typing import Optional

import numpy as np

from .algebra import ResiduatedLattice, ValidationError, build, default_names
from .filters import idempotent_generator


class AlgebraSyntaxError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


def _lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def parse_tables(text: str) -> dict:
    """Parse the grammar without validating the algebra.

    Returns ``{"leq", "mult", "impl" (or None), "names"}``.
    """
    lines = list(_lines(text))
    if not lines:
        raise AlgebraSyntaxError(1, "empty file")
    no, toks = lines[0]
    if toks[0] != "size" or len(toks) != 2 or not toks[1].isdigit() or int(toks[1]) < 1:
        raise AlgebraSyntaxError(no, "expected 'size N' with N >= 1")
    n = int(toks[1])
    i = 1
    names = None
    if i < len(lines) and lines[i][1][0] == "elements":
        no, toks = lines[i]
        names = toks[1:]
        if len(names) != n:
            raise AlgebraSyntaxError(no, f"expected {n} element names, got {len(names)}")
        if len(set(names)) != n:
            raise AlgebraSyntaxError(no, "element names must be distinct")
        i += 1
    names = tuple(names) if names is not None else default_names(n)
    index = {name: k for k, name in enumerate(names)}

    sections = {}
    while i < len(lines):
        no, toks = lines[i]
        head = toks[0]
        if head not in ("order", "mult", "impl") or len(toks) != 1:
            raise AlgebraSyntaxError(no, f"expected a section header (order/mult/impl), got {' '.join(toks)!r}")
        if head in sections:
            raise AlgebraSyntaxError(no, f"duplicate section {head!r}")
        rows = lines[i + 1:i + 1 + n]
        if len(rows) < n:
            raise AlgebraSyntaxError(no, f"section {head!r} needs {n} rows")
        table = np.zeros((n, n), dtype=np.int64)
        for r, (rno, rtoks) in enumerate(rows):
            if len(rtoks) != n:
                raise AlgebraSyntaxError(rno, f"expected {n} entries, got {len(rtoks)}")
            for c, tok in enumerate(rtoks):
                if head == "order":
                    if tok not in ("0", "1"):
                        raise AlgebraSyntaxError(rno, f"order entries must be 0 or 1, got {tok!r}")
                    table[r, c] = int(tok)
                else:
                    if tok not in index:
                        raise AlgebraSyntaxError(rno, f"unknown element {tok!r}")
                    table[r, c] = index[tok]
        sections[head] = table
        i += 1 + n
    for req in ("order", "mult"):
        if req not in sections:
            raise AlgebraSyntaxError(lines[-1][0], f"missing {req!r} section")
    return {
        "leq": sections["order"].astype(bool),
        "mult": sections["mult"],
        "impl": sections.get("impl"),
        "names": names,
    }


def parse_algebra(text: str) -> ResiduatedLattice:
    """Parse and validate; raises :class:`AlgebraSyntaxError` or :class:`ValidationError`."""
    t = parse_tables(text)
    return build(t["leq"], t["mult"], t["impl"], t["names"])


def load_algebra(path) -> ResiduatedLattice:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def serialize_algebra(A: ResiduatedLattice, include_impl: bool = True, comment: Optional[str] = None) -> str:
    names = A.names
    out = []
    if comment:
        out += [f"# {line}" for line in comment.splitlines()]
    out.append(f"size {A.size}")
    out.append("elements " + " ".join(names))
    out.append("order")
    out += [" ".join("1" if v else "0" for v in row) for row in A.leq]
    out.append("mult")
    out += [" ".join(names[v] for v in row) for row in A.mult]
    if include_impl:
        out.append("impl")
        out += [" ".join(names[v] for v in row) for row in A.impl]
    return "\n".join(out) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(G, algebra: Optional[ResiduatedLattice] = None, name: Optional[str] = None) -> str:
    """Deterministic DOT text: vertices in graph order, edges low index first.

    Comaximal-graph vertices are labelled by their member list; when the
    algebra is supplied the idempotent generator goes in ``xlabel``.
    """
    name = name or (G.kind if G.kind in ("comaximal", "zerodiv") else "G")
    out = [f"graph {name} {{"]
    for i in range(G.vertex_count):
        attrs = [f"label={_dot_quote(G.label_text(i))}"]
        if algebra is not None and G.kind == "comaximal":
            gen = algebra.names[idempotent_generator(algebra, G.labels[i])]
            attrs.append(f"xlabel={_dot_quote('<' + gen + '>')}")
        out.append(f"  n{i} [{', '.join(attrs)}];")
    for u, v in G.edges():
        out.append(f"  n{u} -- n{v};")
    out.append("}")
    return "\n".join(out) + "\n"


def _fin(v):
    return "inf" if v == math.inf else int(v)


def catalog_record(summary) -> str:
    """One JSON line with keys in a fixed order."""
    rec = {
        "size": summary.size,
        "canonical_key": summary.canonical_key.hex(),
        "flags": summary.flags.as_dict(),
        "filter_count": summary.filter_count,
        "max_filter_count": summary.max_filter_count,
        "radical_size": summary.radical_size,
        "graph": {
            "vertices": summary.graph_vertices,
            "edges": summary.graph_edges,
            "diameter": _fin(summary.diameter),
            "girth": _fin(summary.girth),
            "omega": summary.omega,
            "chi": summary.chi,
            "planar": summary.planar,
            "canonical_graph_form": summary.graph_form.hex(),
        },
    }
    return json.dumps(rec, separators=(",", ":"))


def read_catalog(path) -> list:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


__all__ = [
    "AlgebraSyntaxError", "ValidationError", "parse_tables", "parse_algebra", "load_algebra",
    "serialize_algebra", "export_dot", "catalog_record", "read_catalog",
]
