"""Enumeration of finite residuated lattices up to isomorphism.

Two phases: bounded lattices of size n (one canonical representative per
isomorphism class), then every residuated multiplication on each lattice,
reduced to one table per orbit of the lattice's automorphism group.  The
lattice reduct is an isomorphism invariant, so orbits never need comparing
across lattices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .algebra import (ResiduatedLattice, _freeze, build, default_names, join_table,
                      meet_table)
from .canon import automorphisms, minimal_order_labelings, order_code_bytes


@dataclass(frozen=True, eq=False)
class LatticeSkeleton:
    leq: np.ndarray
    key: bytes

    @property
    def size(self) -> int:
        return self.leq.shape[0]

    @cached_property
    def meet(self):
        return meet_table(self.leq)

    @cached_property
    def join(self):
        return join_table(self.leq)

    @cached_property
    def automorphisms(self) -> list:
        return automorphisms(self.leq)


def _meet_closed(down, k):
    """Every pair involving element ``k`` has a glb among ``0..k``."""
    dk = down[k]
    for i in range(k):
        common = dk & down[i]
        # a glb exists iff the common down-set is principal
        ok = False
        for g in range(k + 1):
            if down[g] == common:
                ok = True
                break
        if not ok:
            return False
    return True


def _labeled_lattices(n):
    """Naturally labeled lattices on ``0..n-1`` with heights non-decreasing.

    Every isomorphism class appears at least once: the canonical labeling is
    such a labeling.  Initial segments of a natural labeling are down-sets,
    so each one must already be meet-closed.
    """
    if n == 1:
        yield np.ones((1, 1), dtype=bool)
        return
    inner = n - 2
    down = [1]  # bitmask of elements below-or-equal, element 0 is bottom
    height = [0]

    def antichains(k):
        elems = list(range(1, k))
        for r in range(0, len(elems) + 1):
            for combo in itertools.combinations(elems, r):
                if all(not (down[b] >> a) & 1 and not (down[a] >> b) & 1
                       for a, b in itertools.combinations(combo, 2)):
                    yield combo

    def rec(k):
        if k == inner + 1:
            leq = np.zeros((n, n), dtype=bool)
            for y in range(k):
                for x in range(k):
                    if (down[y] >> x) & 1:
                        leq[x, y] = True
            leq[:, n - 1] = True
            yield leq
            return
        for combo in antichains(k):
            lower = combo if combo else (0,)
            h = 1 + max(height[c] for c in lower)
            if h < height[-1]:
                continue
            mask = 1 << k
            for c in lower:
                mask |= down[c]
            down.append(mask)
            height.append(h)
            if _meet_closed(down, k):
                yield from rec(k + 1)
            down.pop()
            height.pop()

    yield from rec(1)


def skeleton_from_leq(leq) -> LatticeSkeleton:
    """Relabel a bounded lattice into its canonical labeling."""
    code, labs = minimal_order_labelings(leq)
    lab = labs[0]
    leq = np.asarray(leq, dtype=bool)[np.ix_(lab, lab)]
    leq.flags.writeable = False
    return LatticeSkeleton(leq, bytes([leq.shape[0]]) + order_code_bytes(code))


def enumerate_skeletons(n: int) -> list:
    """One canonical representative per isomorphism class of n-element lattices,
    sorted by canonical key."""
    if n < 1:
        raise ValueError("size must be positive")
    seen = {}
    for leq in _labeled_lattices(n):
        sk = skeleton_from_leq(leq)
        seen.setdefault(sk.key, sk)
    return [seen[k] for k in sorted(seen)]


def cell_order(n):
    """Free cells ``(x, y)``, ``x <= y`` inner, grouped by the larger element.

    Elements ``0..k`` form a down-set, hence a subalgebra once their block is
    filled, so associativity on them is decided as early as possible.
    """
    cells = [(x, y) for y in range(1, n - 1) for x in range(1, y + 1)]
    cx = np.array([c[0] for c in cells], dtype=np.int64)
    cy = np.array([c[1] for c in cells], dtype=np.int64)
    return cx, cy


def raw_multiplications(sk: LatticeSkeleton) -> np.ndarray:
    """Every residuated multiplication table on the labeled skeleton."""
    n = sk.size
    if n == 1:
        return np.zeros((1, 1, 1), dtype=np.int64)
    leq = np.ascontiguousarray(sk.leq, dtype=np.uint8)
    meet = np.ascontiguousarray(sk.meet, dtype=np.int64)
    join = np.ascontiguousarray(sk.join, dtype=np.int64)
    cx, cy = cell_order(n)
    cap = 1024
    while True:
        out, count, overflow = kernels.search_multiplications(n, leq, meet, join, cx, cy, cap)
        if not overflow:
            return out[:count]
        cap *= 4


def orbit_representatives(tables: np.ndarray, autos: list) -> np.ndarray:
    """Keep the tables that are lexicographically least in their orbit."""
    if len(tables) == 0 or len(autos) <= 1:
        return tables
    n = tables.shape[1]
    flat = tables.reshape(len(tables), -1)
    keep = np.ones(len(tables), dtype=bool)
    for phi in autos:
        phi = np.asarray(phi, dtype=np.int64)
        inv = np.argsort(phi)
        img = phi[tables[:, inv[:, None], inv[None, :]]].reshape(len(tables), -1)
        diff = img != flat
        first = np.argmax(diff, axis=1)
        differs = diff.any(axis=1)
        rows = np.arange(len(tables))
        smaller = differs & (img[rows, first] < flat[rows, first])
        keep &= ~smaller
    return tables[keep]


def complete_to_residuated(sk: LatticeSkeleton) -> list:
    """All residuated lattices on the skeleton, one per isomorphism class."""
    tables = orbit_representatives(raw_multiplications(sk), sk.automorphisms)
    names = default_names(sk.size)
    out = []
    for t in tables:
        out.append(build(sk.leq, t, names=names))
    return out
