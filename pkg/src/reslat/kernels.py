"""Search kernels for residuated multiplications on a fixed finite lattice.

Conventions shared by every kernel: elements are ``0..n-1``, element 0 is the
bottom, ``n-1`` the top, and the indexing is a linear extension of the order
(``x <= y`` implies ``x <= y`` as integers).  ``leq`` is a uint8 matrix,
``meet``/``join`` are int64 tables.  Unknown multiplication entries are -1.
"""

import numpy as np

from ._accel import njit


@njit
def _row_consistent(m, join, r, n):
    # x*(y v z) == (x*y) v (x*z) on every fully known triple of row r
    for c1 in range(n):
        a = m[r, c1]
        if a < 0:
            continue
        for c2 in range(c1 + 1, n):
            b = m[r, c2]
            if b < 0:
                continue
            t = m[r, join[c1, c2]]
            if t >= 0 and t != join[a, b]:
                return False
    return True


@njit
def _assoc_consistent(m, lo, hi):
    for x in range(lo, hi):
        for y in range(lo, hi):
            xy = m[x, y]
            if xy < 0:
                continue
            for z in range(lo, hi):
                yz = m[y, z]
                if yz < 0:
                    continue
                left = m[xy, z]
                if left < 0:
                    continue
                right = m[x, yz]
                if right >= 0 and left != right:
                    return False
    return True


@njit
def search_multiplications(n, leq, meet, join, cell_x, cell_y, cap):
    """Enumerate every commutative, associative, join-preserving monoid
    operation with unit ``n-1`` and absorbing ``0`` on the lattice.

    Cells ``(cell_x[k], cell_y[k])`` are the free upper-triangle entries over
    the inner elements, assigned in the given order by depth-first search.
    Returns ``(tables, count, overflow)``; ``tables[:count]`` holds the
    solutions and ``overflow`` is set when more than ``cap`` exist.
    """
    out = np.zeros((cap, n, n), dtype=np.int64)
    m = np.full((n, n), -1, dtype=np.int64)
    top = n - 1
    for y in range(n):
        m[0, y] = 0
        m[y, 0] = 0
        m[top, y] = y
        m[y, top] = y
    ncells = cell_x.shape[0]
    count = 0
    overflow = False
    if ncells == 0:
        out[0] = m
        return out, 1, False

    nxt = np.zeros(ncells + 1, dtype=np.int64)
    k = 0
    while k >= 0:
        if k == ncells:
            if count < cap:
                out[count] = m
                count += 1
            else:
                overflow = True
                break
            k -= 1
            continue
        x = cell_x[k]
        y = cell_y[k]
        m[x, y] = -1
        m[y, x] = -1
        bound = meet[x, y]
        v = nxt[k]
        found = False
        while v <= bound:
            if leq[v, bound]:
                m[x, y] = v
                m[y, x] = v
                if (_row_consistent(m, join, x, n)
                        and (x == y or _row_consistent(m, join, y, n))
                        and _assoc_consistent(m, 1, top)):
                    found = True
                    break
                m[x, y] = -1
                m[y, x] = -1
            v += 1
        if found:
            nxt[k] = v + 1
            k += 1
            nxt[k] = 0
        else:
            k -= 1
    return out, count, overflow
