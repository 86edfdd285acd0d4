"""Per-algebra summaries, catalogs and census tables."""

from __future__ import annotations

import multiprocessing
import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .algebra import ClassFlags, ResiduatedLattice, classify
from .enumeration import (LatticeSkeleton, complete_to_residuated, enumerate_skeletons,
                          orbit_representatives, raw_multiplications)
from .filters import all_filters
from .graphs import canonical_graph_form, comaximal_filter_graph, invariants, shape_name

CLASSES = ("all", "mtl", "bl", "heyting", "godel", "mv", "non_prelinear")


def in_class(flags: ClassFlags, cls: str) -> bool:
    if cls == "all":
        return True
    if cls == "non_prelinear":
        return not flags.prelinear
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    return getattr(flags, cls)


@dataclass(frozen=True)
class AlgebraSummary:
    size: int
    canonical_key: bytes
    flags: ClassFlags
    filter_count: int
    max_filter_count: int
    radical_size: int
    graph_vertices: int
    graph_edges: int
    diameter: float
    girth: float
    omega: int
    chi: int
    planar: bool
    graph_form: bytes
    shape: str


def summarize(A: ResiduatedLattice, key: Optional[bytes] = None) -> AlgebraSummary:
    from .algebra import canonical_form

    fl = all_filters(A)
    G = comaximal_filter_graph(A, fl)
    inv = invariants(G)
    return AlgebraSummary(
        size=A.size,
        canonical_key=key if key is not None else canonical_form(A),
        flags=classify(A),
        filter_count=len(fl.all),
        max_filter_count=len(fl.maximal_indices),
        radical_size=len(fl.radical),
        graph_vertices=inv.vertex_count,
        graph_edges=inv.edge_count,
        diameter=inv.diameter,
        girth=inv.girth,
        omega=inv.clique_number,
        chi=inv.chromatic_number,
        planar=inv.planar,
        graph_form=canonical_graph_form(G),
        shape=shape_name(G.adj),
    )


def algebras_of_skeleton(sk: LatticeSkeleton) -> list:
    """``(key, algebra)`` pairs; the key is the canonical form of the algebra."""
    algs = complete_to_residuated(sk)
    n = sk.size
    out = []
    for A in algs:
        tri = bytes(int(A.mult[i, j]) for i in range(n) for j in range(i, n))
        out.append((sk.key + tri, A))
    return out


def _skeleton_job(args):
    sk = args
    return [summarize(A, key) for key, A in algebras_of_skeleton(sk)]


class BudgetExceeded(RuntimeError):
    """Raised when the wall-clock budget runs out; carries the completed rows."""

    def __init__(self, rows, skipped):
        super().__init__(f"budget exceeded; skipped sizes {skipped}")
        self.rows = rows
        self.skipped = skipped


def _map(jobs, fn, items):
    if jobs <= 1:
        for it in items:
            yield fn(it)
        return
    ctx = multiprocessing.get_context("fork" if sys.platform != "win32" else "spawn")
    with ctx.Pool(jobs) as pool:
        yield from pool.imap(fn, items)


def catalog(n: int, jobs: int = 1, deadline: Optional[float] = None, progress=None) -> list:
    """Summaries of every algebra of size ``n``, sorted by canonical key.

    Raises :class:`BudgetExceeded` (with no rows) if ``deadline`` passes.
    """
    skeletons = enumerate_skeletons(n)
    out = []
    for i, part in enumerate(_map(jobs, _skeleton_job, skeletons)):
        out.extend(part)
        if progress is not None:
            print(f"{n}/{i}/{len(out)}", file=progress, flush=True)
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded([], [n])
    out.sort(key=lambda s: s.canonical_key)
    return out


def enumerate_algebras(n: int):
    """Yield every residuated lattice of size ``n`` up to isomorphism, in key order."""
    pairs = []
    for sk in enumerate_skeletons(n):
        pairs.extend(algebras_of_skeleton(sk))
    pairs.sort(key=lambda p: p[0])
    for _, A in pairs:
        yield A


@dataclass
class CensusRow:
    size: int
    counts: dict = field(default_factory=dict)
    nonnull: dict = field(default_factory=dict)
    shapes: dict = field(default_factory=dict)  # class -> Counter(graph form -> count)
    shape_names: dict = field(default_factory=dict)  # graph form -> readable name

    def shape_census(self, cls: str) -> Counter:
        return self.shapes[cls]

    def named_shapes(self, cls: str) -> dict:
        return {self.shape_names[k]: v for k, v in sorted(self.shapes[cls].items())}


def row_from_summaries(n: int, summaries) -> CensusRow:
    row = CensusRow(n)
    for cls in CLASSES:
        row.counts[cls] = 0
        row.nonnull[cls] = 0
        row.shapes[cls] = Counter()
    for s in summaries:
        for cls in CLASSES:
            if in_class(s.flags, cls):
                row.counts[cls] += 1
                if s.graph_vertices:
                    row.nonnull[cls] += 1
                    row.shapes[cls][s.graph_form] += 1
        if s.graph_vertices:
            row.shape_names[s.graph_form] = s.shape
    return row


def census(n_max: int, jobs: int = 1, budget: Optional[float] = None, progress=None,
           catalog_sink=None, n_min: int = 1) -> list:
    """Census rows for sizes ``n_min..n_max``.

    With a ``budget`` in seconds, a size not finished in time is skipped (not
    reported partially) and :class:`BudgetExceeded` carries the finished rows.
    ``catalog_sink`` receives each size's sorted summaries.
    """
    deadline = None if budget is None else time.monotonic() + budget
    rows = []
    for n in range(n_min, n_max + 1):
        try:
            summaries = catalog(n, jobs, deadline, progress)
        except BudgetExceeded:
            raise BudgetExceeded(rows, list(range(n, n_max + 1)))
        if catalog_sink is not None:
            catalog_sink(n, summaries)
        rows.append(row_from_summaries(n, summaries))
    return rows


def shape_census(n: int, cls: str, jobs: int = 1) -> Counter:
    return row_from_summaries(n, catalog(n, jobs)).shape_census(cls)


# -- table rendering -------------------------------------------------------------

TABLE_CLASSES = ("all", "mtl", "bl", "heyting", "godel", "mv")
_LABEL = {"all": "All", "mtl": "MTL", "bl": "BL", "heyting": "Heyting", "godel": "Godel",
          "mv": "MV", "non_prelinear": "non-prelinear"}


def format_tables(rows) -> str:
    sizes = [r.size for r in rows]
    width = max([7] + [len(str(r.counts["all"])) + 1 for r in rows])
    head = "class".ljust(14) + "".join(str(s).rjust(width) for s in sizes)
    out = ["algebras per size", head]
    for cls in TABLE_CLASSES:
        out.append(_LABEL[cls].ljust(14) + "".join(str(r.counts[cls]).rjust(width) for r in rows))
    out += ["", "non-null comaximal filter graphs per size", head]
    for cls in TABLE_CLASSES:
        out.append(_LABEL[cls].ljust(14) + "".join(str(r.nonnull[cls]).rjust(width) for r in rows))
    out += ["", "graph shapes (non-null graphs)"]
    for r in rows:
        for cls in CLASSES:
            named = r.named_shapes(cls)
            if named:
                body = ", ".join(f"{k}: {v}" for k, v in named.items())
                out.append(f"  size {r.size} {_LABEL[cls]}: {body}")
    return "\n".join(out) + "\n"


__all__ = [
    "AlgebraSummary", "BudgetExceeded", "CensusRow", "CLASSES", "catalog", "census",
    "enumerate_algebras", "format_tables", "in_class", "row_from_summaries", "shape_census",
    "summarize", "orbit_representatives", "raw_multiplications", "np",
]
