"""Filters of a finite residuated lattice.

A filter is stored as a bitmask over element indices.  In a finite algebra
every filter is the principal up-set of an idempotent, which makes the
whole filter lattice cheap to list.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .algebra import ResiduatedLattice


@dataclass(frozen=True, order=False)
class Filter:
    mask: int
    algebra_size: int

    @property
    def members(self) -> tuple:
        return tuple(i for i in range(self.algebra_size) if (self.mask >> i) & 1)

    def __contains__(self, x) -> bool:
        return bool((self.mask >> int(x)) & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self):
        return iter(self.members)

    def issubset(self, other: "Filter") -> bool:
        return self.mask & ~other.mask == 0

    def __le__(self, other: "Filter") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "Filter") -> bool:
        return self.issubset(other) and self.mask != other.mask

    @property
    def proper(self) -> bool:
        return self.mask != (1 << self.algebra_size) - 1

    def sort_key(self):
        return (len(self), self.members)

    def format(self, names) -> str:
        return "{" + ",".join(names[i] for i in self.members) + "}"


@dataclass(frozen=True)
class FilterLattice:
    all: tuple
    maximal_indices: tuple
    radical_index: int
    prime_indices: tuple

    @property
    def maximal(self) -> list:
        return [self.all[i] for i in self.maximal_indices]

    @property
    def radical(self) -> Filter:
        return self.all[self.radical_index]

    @property
    def primes(self) -> list:
        return [self.all[i] for i in self.prime_indices]

    def index(self, f: Filter) -> int:
        return self.all.index(f)


def _mask(xs: Iterable[int]) -> int:
    m = 0
    for x in xs:
        m |= 1 << int(x)
    return m


def _elements(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def up_closure(A: ResiduatedLattice, mask: int) -> int:
    ups = A.up_masks
    out = 0
    for x in _elements(mask):
        out |= ups[x]
    return out


def generated_filter(A: ResiduatedLattice, X: Iterable[int] = ()) -> Filter:
    """Smallest filter containing ``X``: up-closure of all finite products."""
    mult = A.mult
    prods = _mask(X) | (1 << A.top)
    while True:
        new = prods
        for x in _elements(prods):
            for y in _elements(prods):
                new |= 1 << int(mult[x, y])
        if new == prods:
            break
        prods = new
    return Filter(up_closure(A, prods), A.size)


def filter_join(A: ResiduatedLattice, F: Filter, G: Filter) -> Filter:
    """``{z : z >= x*y for some x in F, y in G}``."""
    mult = A.mult
    prods = 0
    for x in F.members:
        for y in G.members:
            prods |= 1 << int(mult[x, y])
    return Filter(up_closure(A, prods), A.size)


def is_filter(A: ResiduatedLattice, mask: int) -> bool:
    """Direct check: nonempty, closed under products, upward closed."""
    if not mask:
        return False
    mult = A.mult
    elems = list(_elements(mask))
    if up_closure(A, mask) != mask:
        return False
    return all((mask >> int(mult[x, y])) & 1 for x in elems for y in elems)


def is_deductive_system(A: ResiduatedLattice, mask: int) -> bool:
    """Contains the top and is closed under modus ponens."""
    if not (mask >> A.top) & 1:
        return False
    impl = A.impl
    for x in _elements(mask):
        for y in range(A.size):
            if (mask >> int(impl[x, y])) & 1 and not (mask >> y) & 1:
                return False
    return True


def all_filters(A: ResiduatedLattice) -> FilterLattice:
    """Every filter, ordered by (cardinality, member tuple)."""
    n = A.size
    mult = A.mult
    found = {A.up_masks[e] for e in range(n) if mult[e, e] == e}
    # closing under meet and join is a no-op for finite algebras; kept as a guard
    while True:
        fs = list(found)
        new = set(found)
        for i, f in enumerate(fs):
            for g in fs[i + 1:]:
                new.add(f & g)
                new.add(filter_join(A, Filter(f, n), Filter(g, n)).mask)
        if new == found:
            break
        found = new
    filters = sorted((Filter(m, n) for m in found), key=Filter.sort_key)

    proper = [i for i, f in enumerate(filters) if f.proper]
    maximal = tuple(
        i for i in proper
        if not any(filters[i] < filters[j] for j in proper)
    )
    rad_mask = (1 << n) - 1
    for i in maximal:
        rad_mask &= filters[i].mask
    radical_index = next(i for i, f in enumerate(filters) if f.mask == rad_mask)
    join = A.join
    primes = []
    for i in proper:
        m = filters[i].mask
        if all((m >> x) & 1 or (m >> y) & 1
               for x in range(n) for y in range(x + 1, n)
               if (m >> int(join[x, y])) & 1):
            primes.append(i)
    return FilterLattice(tuple(filters), maximal, radical_index, tuple(primes))


def maximal_filters(A: ResiduatedLattice) -> list:
    return all_filters(A).maximal


def radical(A: ResiduatedLattice) -> Filter:
    return all_filters(A).radical


def prime_filters(A: ResiduatedLattice) -> list:
    return all_filters(A).primes


def is_local(A: ResiduatedLattice) -> bool:
    return len(all_filters(A).maximal_indices) == 1


def comaximal_witness(A: ResiduatedLattice, F: Filter, G: Filter) -> Optional[tuple]:
    """A pair ``(x, y)`` with ``x in F``, ``y in G`` and ``x*y = 0``, if any."""
    mult = A.mult
    for x in F.members:
        for y in G.members:
            if mult[x, y] == 0:
                return (x, y)
    return None


def is_comaximal(A: ResiduatedLattice, F: Filter, G: Filter) -> tuple:
    """Return ``(comaximal, witness)``; ``witness`` is None when not comaximal."""
    witness = comaximal_witness(A, F, G)
    if __debug__:
        joined = filter_join(A, F, G).mask == A.full_mask
        assert joined == (witness is not None), "join and witness routes disagree"
    return witness is not None, witness


def idempotent_generator(A: ResiduatedLattice, F: Filter) -> int:
    """Product of all members of ``F``: the idempotent whose up-set is ``F``."""
    p = A.top
    mult = A.mult
    for x in F.members:
        p = int(mult[p, x])
    return p
