"""Exact invariants of small simple graphs.

Graphs are given as symmetric boolean adjacency matrices (or anything
``np.asarray`` turns into one).  Everything here is exact; the graphs that
arise from algebras of size <= 10 have a few dozen vertices at most.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

INF = math.inf


def neighbor_masks(adj) -> list:
    adj = np.asarray(adj, dtype=bool)
    return [sum(1 << int(j) for j in np.flatnonzero(row)) for row in adj]


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _popcount(mask):
    return bin(mask).count("1")


# -- distances ---------------------------------------------------------------

def distances(adj) -> np.ndarray:
    """All-pairs shortest path lengths (``inf`` when unreachable)."""
    nb = neighbor_masks(adj)
    n = len(nb)
    dist = np.full((n, n), INF)
    for s in range(n):
        dist[s, s] = 0
        frontier = 1 << s
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= nb[v]
            nxt &= ~seen
            seen |= nxt
            for v in _bits(nxt):
                dist[s, v] = d
            frontier = nxt
    return dist


def diameter(adj):
    n = len(adj)
    if n <= 1:
        return 0
    d = distances(adj).max()
    return INF if d == INF else int(d)


def is_connected(adj) -> bool:
    return len(adj) <= 1 or diameter(adj) != INF


def girth(adj):
    """Length of a shortest cycle, by breadth-first search from every vertex."""
    nb = neighbor_masks(adj)
    n = len(nb)
    best = INF
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in _bits(nb[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# -- cliques and colourings ----------------------------------------------------

def max_clique(adj) -> list:
    """A maximum clique (Bron-Kerbosch with Tomita pivoting on bitsets)."""
    nb = neighbor_masks(adj)
    best = [0]

    def expand(r, p, x):
        if not p and not x:
            if _popcount(r) > _popcount(best[0]):
                best[0] = r
            return
        if _popcount(r) + _popcount(p) <= _popcount(best[0]):
            return
        pivot = max(_bits(p | x), key=lambda u: _popcount(p & nb[u]))
        for v in list(_bits(p & ~nb[pivot])):
            expand(r | (1 << v), p & nb[v], x & nb[v])
            p &= ~(1 << v)
            x |= 1 << v

    if nb:
        expand(0, (1 << len(nb)) - 1, 0)
    return list(_bits(best[0]))


def clique_number(adj) -> int:
    return len(max_clique(adj))


def is_proper_coloring(adj, classes) -> bool:
    adj = np.asarray(adj, dtype=bool)
    seen = set()
    for cls in classes:
        cls = list(cls)
        if seen & set(cls):
            return False
        seen |= set(cls)
        if adj[np.ix_(cls, cls)].any():
            return False
    return seen == set(range(adj.shape[0]))


def optimal_coloring(adj, upper: Optional[list] = None, lower: int = 0) -> list:
    """Exact minimum colouring by DSATUR branch and bound.

    ``upper`` is a known proper colouring (list of classes) used as the
    starting incumbent; ``lower`` a known lower bound such as the clique
    number.  Returns a colour index per vertex.
    """
    nb = neighbor_masks(adj)
    n = len(nb)
    if n == 0:
        return []
    lower = max(lower, 1 if n else 0)
    if upper is not None:
        best = [0] * n
        for c, cls in enumerate(upper):
            for v in cls:
                best[v] = c
        best_k = len(upper)
    else:
        best = list(range(n))
        best_k = n
    if best_k <= lower:
        return best
    color = [-1] * n
    result = {"best": best, "k": best_k}

    def rec(colored, used):
        if used >= result["k"]:
            return
        if colored == n:
            result["best"] = list(color)
            result["k"] = used
            return
        # most saturated uncoloured vertex, ties by degree
        pick, pick_sat, pick_deg = -1, -1, -1
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[u] for u in _bits(nb[v]) if color[u] >= 0})
            deg = _popcount(nb[v])
            if sat > pick_sat or (sat == pick_sat and deg > pick_deg):
                pick, pick_sat, pick_deg = v, sat, deg
        forbidden = {color[u] for u in _bits(nb[pick]) if color[u] >= 0}
        for c in range(min(used + 1, result["k"] - 1)):
            if c in forbidden:
                continue
            color[pick] = c
            rec(colored + 1, max(used, c + 1))
            color[pick] = -1
            if result["k"] <= lower:
                return

    rec(0, 0)
    return result["best"]


def chromatic_number(adj, upper=None, lower=None) -> int:
    if len(adj) == 0:
        return 0
    if lower is None:
        lower = clique_number(adj)
    return len(set(optimal_coloring(adj, upper, lower)))


# -- planarity -----------------------------------------------------------------

@dataclass
class PlanarityResult:
    planar: bool
    kuratowski: Optional[list] = None  # edge list of a K5 / K3,3 subdivision
    kind: Optional[str] = None  # "K5" or "K3,3"


def _edges(nb):
    return [(u, v) for u in range(len(nb)) for v in _bits(nb[u]) if u < v]


def _biconnected_blocks(nb):
    """Edge sets of the biconnected components (Hopcroft-Tarjan)."""
    n = len(nb)
    disc = [-1] * n
    low = [0] * n
    blocks = []
    stack = []
    t = [0]

    def dfs(u, parent):
        disc[u] = low[u] = t[0]
        t[0] += 1
        for w in _bits(nb[u]):
            if disc[w] < 0:
                stack.append((u, w))
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == (u, w):
                            break
                    blocks.append(block)
            elif w != parent and disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])

    for s in range(n):
        if disc[s] < 0:
            dfs(s, -1)
    return blocks


def _find_cycle(adjs, start):
    """Some cycle through the (biconnected) graph, as a vertex list."""
    parent = {start: None}
    stack = [start]
    order = []
    while stack:
        u = stack.pop()
        order.append(u)
        for w in adjs[u]:
            if w not in parent:
                parent[w] = u
                stack.append(w)
            elif w != parent[u] and parent.get(w) != u:
                # back/cross edge u-w closes a cycle through their common ancestor
                pu, pw = [], []
                a = u
                while a is not None:
                    pu.append(a)
                    a = parent[a]
                b = w
                while b is not None:
                    pw.append(b)
                    b = parent[b]
                common = set(pu) & set(pw)
                cu = pu[:next(i for i, a in enumerate(pu) if a in common) + 1]
                cw = pw[:next(i for i, b in enumerate(pw) if b in common)]
                return cu + cw[::-1]
    return None


def _dmp_planar(vertices, edges) -> bool:
    """Demoucron-Malgrange-Pertuiset path embedding for a biconnected block."""
    adjs = {v: set() for v in vertices}
    for u, v in edges:
        adjs[u].add(v)
        adjs[v].add(u)
    if len(vertices) <= 4 or len(edges) <= len(vertices):
        return True
    if len(edges) > 3 * len(vertices) - 6:
        return False
    cycle = _find_cycle(adjs, next(iter(vertices)))
    emb_v = set(cycle)
    emb_e = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    faces = [list(cycle), list(cycle)]
    total = len(edges)
    while len(emb_e) < total:
        fragments = []
        for u, v in edges:
            if u in emb_v and v in emb_v and frozenset((u, v)) not in emb_e:
                fragments.append(({u, v}, [u, v], None))
        seen = set()
        for s in vertices:
            if s in emb_v or s in seen:
                continue
            comp = {s}
            q = [s]
            att = set()
            while q:
                u = q.pop()
                for w in adjs[u]:
                    if w in emb_v:
                        att.add(w)
                    elif w not in comp:
                        comp.add(w)
                        q.append(w)
            seen |= comp
            fragments.append((att, None, comp))
        choice = None
        for att, path, comp in fragments:
            ok = [i for i, f in enumerate(faces) if att <= set(f)]
            if not ok:
                return False
            if choice is None or len(ok) == 1:
                choice = (att, path, comp, ok[0])
                if len(ok) == 1:
                    break
        att, path, comp, fi = choice
        if path is None:
            path = _fragment_path(adjs, att, comp)
        face = faces.pop(fi)
        a, b = path[0], path[-1]
        i, j = face.index(a), face.index(b)
        k = len(face)
        inner = path[1:-1]
        arc_ab = [face[(i + t) % k] for t in range((j - i) % k + 1)]
        arc_ba = [face[(j + t) % k] for t in range((i - j) % k + 1)]
        faces.append(arc_ab + inner[::-1])
        faces.append(arc_ba + inner)
        emb_v.update(inner)
        for t in range(len(path) - 1):
            emb_e.add(frozenset((path[t], path[t + 1])))
    return True


def _fragment_path(adjs, att, comp):
    """Path from one attachment through the component to another attachment."""
    a = min(att)
    start = next(w for w in sorted(adjs[a]) if w in comp)
    parent = {start: a}
    q = deque([start])
    while q:
        u = q.popleft()
        for w in sorted(adjs[u]):
            if w in att and w != a:
                path = [w, u]
                while path[-1] != a:
                    path.append(parent[path[-1]])
                return path[::-1]
            if w in comp and w not in parent:
                parent[w] = u
                q.append(w)
    raise AssertionError("fragment with a single attachment")


def _planar_edges(n, edges) -> bool:
    nb = [0] * n
    for u, v in edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    for block in _biconnected_blocks(nb):
        verts = {x for e in block for x in e}
        if not _dmp_planar(verts, [tuple(e) for e in block]):
            return False
    return True


def _kuratowski_kind(edges):
    """Smooth degree-2 vertices and name the remaining graph, if K5 or K3,3."""
    adjs = {}
    for u, v in edges:
        adjs.setdefault(u, set()).add(v)
        adjs.setdefault(v, set()).add(u)
    branch = [v for v, s in adjs.items() if len(s) != 2]
    if any(len(adjs[v]) not in (3, 4) for v in branch):
        return None
    # follow each chain of degree-2 vertices between branch vertices
    links = set()
    for b in branch:
        for w in adjs[b]:
            prev, cur = b, w
            while len(adjs[cur]) == 2:
                prev, cur = cur, next(x for x in adjs[cur] if x != prev)
            if cur == b:
                return None
            links.add(frozenset((b, cur)))
    nbr = {b: {x for l in links if b in l for x in l if x != b} for b in branch}
    if len(branch) == 5 and len(links) == 10:
        return "K5"
    if len(branch) == 6 and len(links) == 9:
        side = {branch[0]} | set().union(*(nbr[x] for x in nbr[branch[0]]))
        other = set(branch) - side
        if len(side) == 3 and all(nbr[x] == other for x in side):
            return "K3,3"
    return None


def planarity(adj, witness: bool = True) -> PlanarityResult:
    """Exact planarity decision.

    A nonplanar graph is shrunk edge by edge while it stays nonplanar; what is
    left is a subdivision of K5 or K3,3, returned as the certificate.
    """
    nb = neighbor_masks(adj)
    n = len(nb)
    edges = _edges(nb)
    if n >= 3 and len(edges) > 3 * n - 6:
        planar = False
    else:
        planar = _planar_edges(n, edges)
    if planar:
        return PlanarityResult(True)
    if not witness:
        return PlanarityResult(False)
    core = list(edges)
    i = 0
    while i < len(core):
        trial = core[:i] + core[i + 1:]
        if not _planar_edges(n, trial):
            core = trial
        else:
            i += 1
    return PlanarityResult(False, core, _kuratowski_kind(core))


def is_planar(adj) -> bool:
    return planarity(adj, witness=False).planar


# -- isomorphism -------------------------------------------------------------------

def _refine(nb, cells):
    """Equitable refinement of an ordered partition (list of lists)."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for si in range(len(cells)):
            smask = sum(1 << v for v in cells[si])
            out = []
            split = False
            for c in cells:
                if len(c) == 1:
                    out.append(c)
                    continue
                groups = {}
                for v in c:
                    groups.setdefault(_popcount(nb[v] & smask), []).append(v)
                if len(groups) > 1:
                    split = True
                    for k in sorted(groups):
                        out.append(groups[k])
                else:
                    out.append(c)
            if split:
                cells = out
                changed = True
                break
    return cells


def _twins(nb, u, v):
    return (nb[u] & ~(1 << v)) == (nb[v] & ~(1 << u))


def canonical_labeling(adj) -> tuple:
    """``(code, labeling)``: least adjacency code over refined search-tree leaves.

    ``labeling[p]`` is the vertex placed at position ``p``.  Twin vertices
    are interchangeable, so only one of each twin class is individualised.
    """
    nb = neighbor_masks(adj)
    n = len(nb)
    deg_cells = {}
    for v in range(n):
        deg_cells.setdefault(_popcount(nb[v]), []).append(v)
    start = _refine(nb, [deg_cells[d] for d in sorted(deg_cells)])
    best = [None, None]

    def leaf_code(order):
        pos = [0] * n
        for p, v in enumerate(order):
            pos[v] = p
        return tuple(sorted((min(pos[u], pos[w]), max(pos[u], pos[w])) for u in range(n) for w in _bits(nb[u]) if u < w))

    def rec(cells):
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = leaf_code(order)
            if best[0] is None or code < best[0]:
                best[0] = code
                best[1] = order
            return
        cell = cells[target]
        tried = []
        for v in cell:
            if any(_twins(nb, v, t) for t in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            rec(_refine(nb, cells[:target] + [[v], rest] + cells[target + 1:]))

    rec(start)
    if n == 0:
        return (), []
    return best[0], best[1]


def canonical_form(adj) -> bytes:
    """Bytes equal for two graphs iff they are isomorphic."""
    code, _ = canonical_labeling(adj)
    n = len(adj)
    out = bytearray([n >> 8, n & 0xFF])
    for u, v in code:
        out += bytes([u, v])
    return bytes(out)


def isomorphism(adj_g, adj_h) -> Optional[list]:
    """Vertex bijection ``g -> h`` preserving adjacency, or None."""
    if len(adj_g) != len(adj_h):
        return None
    cg, lg = canonical_labeling(adj_g)
    ch, lh = canonical_labeling(adj_h)
    if cg != ch:
        return None
    phi = [0] * len(lg)
    for a, b in zip(lg, lh):
        phi[a] = b
    return phi


def subgraph_embedding(adj_g, adj_h) -> Optional[list]:
    """Injective map ``g -> h`` sending edges to edges (not necessarily induced)."""
    ng = neighbor_masks(adj_g)
    nh = neighbor_masks(adj_h)
    if len(ng) > len(nh):
        return None
    if not ng:
        return []
    dg = [_popcount(m) for m in ng]
    dh = [_popcount(m) for m in nh]
    order = sorted(range(len(ng)), key=lambda v: -dg[v])
    # prefer vertices adjacent to already ordered ones
    placed = [order[0]]
    rest = order[1:]
    while rest:
        pmask = sum(1 << v for v in placed)
        rest.sort(key=lambda v: (-_popcount(ng[v] & pmask), -dg[v]))
        placed.append(rest.pop(0))
    order = placed
    phi = [-1] * len(ng)
    used = [0]

    def rec(i):
        if i == len(order):
            return True
        v = order[i]
        for w in range(len(nh)):
            if (used[0] >> w) & 1 or dh[w] < dg[v]:
                continue
            if all((nh[w] >> phi[u]) & 1 for u in _bits(ng[v]) if phi[u] >= 0):
                phi[v] = w
                used[0] |= 1 << w
                if rec(i + 1):
                    return True
                used[0] &= ~(1 << w)
                phi[v] = -1
        return False

    return list(phi) if rec(0) else None
