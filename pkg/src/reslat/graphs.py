"""Comaximal filter graphs and zero-divisor graphs of residuated lattices."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import graphalg
from .algebra import ResiduatedLattice
from .filters import FilterLattice, all_filters, comaximal_witness, idempotent_generator

INF = math.inf


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """Simple undirected graph; ``labels[i]`` names vertex ``i``.

    ``kind`` is ``"comaximal"`` (labels are filters), ``"zerodiv"`` (labels
    are element indices) or ``"plain"``.
    """

    labels: tuple
    adj: np.ndarray
    kind: str = "plain"
    max_filter_count: Optional[int] = None
    partition: Optional[tuple] = None
    names: tuple = ()

    def __post_init__(self):
        adj = np.array(self.adj, dtype=bool)
        n = len(self.labels)
        if adj.shape != (n, n):
            raise ValueError("adjacency shape does not match the label count")
        if (adj != adj.T).any() or adj.diagonal().any():
            raise ValueError("adjacency must be symmetric with an empty diagonal")
        adj.flags.writeable = False
        object.__setattr__(self, "adj", adj)

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> list:
        return [(int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(self.adj)))]

    def is_null(self) -> bool:
        return self.vertex_count == 0

    def label_text(self, i: int) -> str:
        lab = self.labels[i]
        if self.kind == "comaximal":
            return lab.format(self.names)
        if self.kind == "zerodiv" and self.names:
            return self.names[lab]
        return str(lab)

    def induced(self, keep) -> "LabeledGraph":
        keep = list(keep)
        return LabeledGraph(tuple(self.labels[i] for i in keep), self.adj[np.ix_(keep, keep)],
                            self.kind, self.max_filter_count, None, self.names)


@dataclass(frozen=True)
class GraphInvariants:
    vertex_count: int
    edge_count: int
    connected: bool
    diameter: float
    girth: float
    clique_number: int
    chromatic_number: int
    max_filter_count: Optional[int]
    planar: bool
    partite_classes: tuple = field(default=())

    def as_dict(self) -> dict:
        def fin(v):
            return "inf" if v == INF else int(v)

        return {
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "connected": self.connected,
            "diameter": fin(self.diameter),
            "girth": fin(self.girth),
            "omega": self.clique_number,
            "chi": self.chromatic_number,
            "max_filter_count": self.max_filter_count,
            "planar": self.planar,
            "partite_classes": [list(c) for c in self.partite_classes],
        }


def maximal_partition(A: ResiduatedLattice, G: LabeledGraph, fl: Optional[FilterLattice] = None) -> list:
    """Classes ``S_i``: vertices inside the i-th maximal filter and no earlier one."""
    fl = fl or all_filters(A)
    maxes = fl.maximal
    classes = [[] for _ in maxes]
    for v, F in enumerate(G.labels):
        for i, M in enumerate(maxes):
            if F.issubset(M):
                classes[i].append(v)
                break
        else:
            raise ValueError(f"vertex {v} lies in no maximal filter")
    return classes


def comaximal_filter_graph(A: ResiduatedLattice, fl: Optional[FilterLattice] = None) -> LabeledGraph:
    """Proper filters not inside the radical; edges join comaximal pairs."""
    fl = fl or all_filters(A)
    rad = fl.radical
    verts = [F for F in fl.all if F.proper and not F.issubset(rad)]
    n = len(verts)
    adj = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if comaximal_witness(A, verts[i], verts[j]) is not None:
                adj[i, j] = adj[j, i] = True
    G = LabeledGraph(tuple(verts), adj, "comaximal", len(fl.maximal_indices), None, A.names)
    part = tuple(tuple(c) for c in maximal_partition(A, G, fl)) if n else ()
    object.__setattr__(G, "partition", part)
    return G


def zero_divisor_graph(A: ResiduatedLattice, nonzero_only: bool = False) -> LabeledGraph:
    """Elements with a nonzero annihilator; edges join distinct x, y with ``x*y = 0``.

    The bottom is a vertex whenever ``n >= 2``; ``nonzero_only`` drops it.
    """
    zero = A.mult == 0
    verts = [x for x in range(A.size) if zero[x, 1:].any()]
    if nonzero_only:
        verts = [x for x in verts if x != 0]
    adj = zero[np.ix_(verts, verts)].copy()
    np.fill_diagonal(adj, False)
    return LabeledGraph(tuple(verts), adj, "zerodiv", None, None, A.names)


def invariants(G: LabeledGraph) -> GraphInvariants:
    adj = G.adj
    n = G.vertex_count
    omega = graphalg.clique_number(adj)
    if G.partition is not None and n:
        part = [list(c) for c in G.partition]
        if not graphalg.is_proper_coloring(adj, part):
            raise AssertionError("maximal-filter partition is not a proper colouring")
        coloring = graphalg.optimal_coloring(adj, upper=part, lower=omega)
        classes = tuple(tuple(c) for c in part)
    else:
        coloring = graphalg.optimal_coloring(adj, lower=omega)
        k = len(set(coloring))
        classes = tuple(tuple(v for v in range(n) if coloring[v] == c) for c in range(k))
    chi = len(set(coloring)) if n else 0
    diam = graphalg.diameter(adj)
    return GraphInvariants(
        vertex_count=n,
        edge_count=G.edge_count,
        connected=diam != INF,
        diameter=diam,
        girth=graphalg.girth(adj),
        clique_number=omega,
        chromatic_number=chi,
        max_filter_count=G.max_filter_count,
        planar=graphalg.is_planar(adj),
        partite_classes=classes,
    )


def graph_isomorphic(G: LabeledGraph, H: LabeledGraph) -> Optional[dict]:
    """Adjacency-preserving bijection as ``{label in G: label in H}``, or None."""
    phi = graphalg.isomorphism(G.adj, H.adj)
    if phi is None:
        return None
    return {G.labels[i]: H.labels[j] for i, j in enumerate(phi)}


def embeds_as_subgraph(G: LabeledGraph, H: LabeledGraph) -> Optional[dict]:
    phi = graphalg.subgraph_embedding(G.adj, H.adj)
    if phi is None:
        return None
    return {G.labels[i]: H.labels[j] for i, j in enumerate(phi)}


def generator_embedding(A: ResiduatedLattice, G: LabeledGraph, Z: LabeledGraph) -> Optional[dict]:
    """Map each comaximal-graph vertex to its idempotent generator in ``Z``.

    Returns the map when it is injective and edge-preserving, else None.
    """
    pos = {x: i for i, x in enumerate(Z.labels)}
    phi = {}
    for F in G.labels:
        e = idempotent_generator(A, F)
        if e not in pos:
            return None
        phi[F] = e
    if len(set(phi.values())) != len(phi):
        return None
    for u, v in G.edges():
        if not Z.adj[pos[phi[G.labels[u]]], pos[phi[G.labels[v]]]]:
            return None
    return phi


def canonical_graph_form(G: LabeledGraph) -> bytes:
    return graphalg.canonical_form(G.adj)


def shape_name(adj) -> str:
    """Readable name for common shapes, otherwise ``V<n>E<m>:<hash>``.

    Complete bipartite wins over cycle, so the 4-cycle is ``K2,2``.
    """
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    m = int(adj.sum()) // 2
    deg = sorted(int(d) for d in adj.sum(axis=1))
    if n == 0:
        return "null"
    if m == n * (n - 1) // 2:
        return f"K{n}"
    connected = graphalg.is_connected(adj)
    if connected and m == n - 1 and deg[-1] <= 2:
        return f"P{n}"
    if connected:
        coloring = graphalg.optimal_coloring(adj, lower=2)
        if len(set(coloring)) == 2:
            p = coloring.count(0)
            q = n - p
            if m == p * q:
                p, q = sorted((p, q))
                return f"K{p},{q}"
    if connected and m == n and deg[0] == deg[-1] == 2:
        return f"C{n}"
    digest = hashlib.sha1(graphalg.canonical_form(adj)).hexdigest()[:8]
    return f"V{n}E{m}:{digest}"
