"""Canonical labelings of finite bounded lattices (and algebras on them).

Labelings are restricted to orderings compatible with an iso-invariant
refinement whose primary key is the height of an element, so every
admissible labeling is a linear extension with bottom first and top last.
The canonical labeling minimises the order code; all minimisers form a coset
of the automorphism group, which is what algebra canonical forms range over.
"""

from __future__ import annotations

import numpy as np


def covers(leq: np.ndarray) -> np.ndarray:
    """Covering relation: ``cov[x, y]`` iff ``x < y`` with nothing strictly between."""
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    lt = leq & ~np.eye(n, dtype=bool)
    # x < z < y for some z
    between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
    return lt & ~between


def heights(leq: np.ndarray) -> list[int]:
    """Length of the longest chain from a minimal element up to each element."""
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    below_count = leq.sum(axis=0)
    order = sorted(range(n), key=lambda e: below_count[e])
    h = [0] * n
    cov = covers(leq)
    for y in order:
        lower = np.flatnonzero(cov[:, y])
        if len(lower):
            h[y] = 1 + max(h[x] for x in lower)
    return h


def refined_colors(leq: np.ndarray) -> list[int]:
    """Iso-invariant element colours, ordered first by height."""
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    up = heights(leq)
    down = heights(leq.T)
    cov = covers(leq)
    lower = [list(np.flatnonzero(cov[:, e])) for e in range(n)]
    upper = [list(np.flatnonzero(cov[e, :])) for e in range(n)]
    sig = [(up[e], -down[e], int(leq[:, e].sum()), int(leq[e, :].sum())) for e in range(n)]
    colors = _rank(sig)
    while True:
        sig = [
            (colors[e], tuple(sorted(colors[x] for x in lower[e])), tuple(sorted(colors[x] for x in upper[e])))
            for e in range(n)
        ]
        new = _rank(sig)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _rank(sig):
    table = {s: i for i, s in enumerate(sorted(set(sig)))}
    return [table[s] for s in sig]


def minimal_order_labelings(leq: np.ndarray) -> tuple[tuple, list[list[int]]]:
    """Return ``(code, labelings)`` where each labeling lists elements by new position.

    ``code`` is the lexicographically least order code over admissible
    labelings and ``labelings`` are all labelings achieving it.
    """
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    colors = refined_colors(leq)
    # admissible candidates for every position
    ordered = sorted(range(n), key=lambda e: colors[e])
    slot = [[e for e in range(n) if colors[e] == colors[ordered[p]]] for p in range(n)]
    rows = [[bool(v) for v in leq[:, e]] for e in range(n)]

    best: list[tuple] = [None] * n
    status = [0] * (n + 1)  # per depth: 0 equal to best prefix, -1 strictly less
    status[0] = 0 if n else -1
    found: list[list[int]] = []
    lab = [0] * n
    used = [False] * n
    have_best = [False]

    def rec(p):
        if p == n:
            if status[p] < 0 or not have_best[0]:
                found.clear()
                have_best[0] = True
                for q in range(n + 1):
                    status[q] = 0
            found.append(list(lab))
            return
        for e in slot[p]:
            if used[e]:
                continue
            col = rows[e]
            code = tuple(col[lab[i]] for i in range(p))
            st = status[p]
            if have_best[0] and st == 0:
                if code > best[p]:
                    continue
                if code < best[p]:
                    st = -1
            if st < 0 or not have_best[0]:
                best[p] = code
            status[p + 1] = st
            lab[p] = e
            used[e] = True
            rec(p + 1)
            used[e] = False
        return

    rec(0)
    return tuple(best), found


def order_code_bytes(code: tuple) -> bytes:
    bits = [b for part in code for b in part]
    out = bytearray()
    for i in range(0, len(bits), 8):
        chunk = bits[i:i + 8]
        v = 0
        for j, b in enumerate(chunk):
            if b:
                v |= 1 << (7 - j)
        out.append(v)
    return bytes(out)


def automorphisms(leq: np.ndarray) -> list[list[int]]:
    """All order automorphisms as maps ``element -> element``."""
    _, labs = minimal_order_labelings(leq)
    base = labs[0]
    pos = [0] * len(base)
    for p, e in enumerate(base):
        pos[e] = p
    # lab o base^{-1}: carries base's labeling onto each minimiser
    return [[lab[pos[e]] for e in range(len(base))] for lab in labs]
