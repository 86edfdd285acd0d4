"""Finite commutative bounded integral residuated lattices.

Elements are indices ``0..n-1`` with 0 the bottom and ``n-1`` the top.  An
algebra carries its order matrix, multiplication table and residuum table;
meet and join are derived from the order on first use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .canon import minimal_order_labelings, order_code_bytes


class ResidualMissing(ValueError):
    """The multiplication has no residuum at ``(x, y)``."""

    def __init__(self, x: int, y: int):
        super().__init__(f"no residual for ({x}, {y})")
        self.x = x
        self.y = y


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple

    def describe(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            wit = ",".join(str(w) for w in self.witness)
        else:
            wit = ",".join(names[w] for w in self.witness)
        return f"{_AXIOM_TEXT.get(self.axiom, self.axiom)} at ({wit})"


_AXIOM_TEXT = {
    "order.reflexive": "order not reflexive",
    "order.antisymmetric": "order not antisymmetric",
    "order.transitive": "order not transitive",
    "order.bottom": "element 0 is not the bottom",
    "order.top": "last element is not the top",
    "lattice.join": "no least upper bound",
    "lattice.meet": "no greatest lower bound",
    "mult.range": "multiplication entry out of range",
    "mult.commutative": "multiplication not commutative",
    "mult.associative": "multiplication not associative",
    "mult.unit": "unit law violated",
    "mult.integral": "product exceeds meet",
    "residual.missing": "residual does not exist",
    "impl.range": "implication entry out of range",
    "impl.mismatch": "supplied implication differs from derived",
    "adjunction": "adjunction fails",
}


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom, *witness):
        self.violations.append(Violation(axiom, tuple(int(w) for w in witness)))

    def axioms(self) -> set:
        return {v.axiom for v in self.violations}

    def format(self, names=None) -> str:
        if self.ok:
            return "ok"
        return "\n".join(v.describe(names) for v in self.violations)


class ValidationError(ValueError):
    def __init__(self, report: ValidationReport, names=None):
        self.report = report
        self.names = names
        super().__init__(report.format(names))


@dataclass(frozen=True, eq=False)
class ClassFlags:
    prelinear: bool
    divisible: bool
    involutive: bool
    idempotent: bool

    @property
    def mtl(self) -> bool:
        return self.prelinear

    @property
    def bl(self) -> bool:
        return self.prelinear and self.divisible

    @property
    def godel(self) -> bool:
        return self.bl and self.idempotent

    @property
    def mv(self) -> bool:
        return self.bl and self.involutive

    @property
    def heyting(self) -> bool:
        return self.idempotent

    def as_dict(self) -> dict:
        return {
            name: getattr(self, name)
            for name in ("prelinear", "divisible", "involutive", "idempotent",
                         "mtl", "bl", "godel", "mv", "heyting")
        }

    def __eq__(self, other):
        return isinstance(other, ClassFlags) and self.as_dict() == other.as_dict()

    def __hash__(self):
        return hash(tuple(self.as_dict().values()))


def _freeze(a, dtype):
    a = np.array(a, dtype=dtype)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class ResiduatedLattice:
    leq: np.ndarray
    mult: np.ndarray
    impl: np.ndarray
    names: tuple = ()

    @property
    def size(self) -> int:
        return self.leq.shape[0]

    @property
    def top(self) -> int:
        return self.size - 1

    @cached_property
    def meet(self) -> np.ndarray:
        return _freeze(meet_table(self.leq), np.int64)

    @cached_property
    def join(self) -> np.ndarray:
        return _freeze(meet_table(self.leq.T), np.int64)

    @cached_property
    def up_masks(self) -> tuple:
        """Bitmask of the principal up-set of each element."""
        return tuple(sum(1 << int(y) for y in np.flatnonzero(self.leq[x])) for x in range(self.size))

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def name(self, x: int) -> str:
        return self.names[x]

    def __eq__(self, other):
        if not isinstance(other, ResiduatedLattice):
            return NotImplemented
        return (np.array_equal(self.leq, other.leq) and np.array_equal(self.mult, other.mult)
                and np.array_equal(self.impl, other.impl))

    def __hash__(self):
        return hash((self.leq.tobytes(), self.mult.tobytes()))

    def __repr__(self):
        return f"ResiduatedLattice(size={self.size}, names={list(self.names)})"


def default_names(n: int) -> tuple:
    if n == 1:
        return ("1",)
    if n - 2 <= 24:
        inner = [chr(ord("a") + i) for i in range(n - 2)]
        return tuple(["0"] + inner + ["1"])
    return tuple(f"e{i}" for i in range(n))


def meet_table(leq) -> np.ndarray:
    """Greatest-lower-bound table; entries are -1 where no glb exists."""
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    out = np.full((n, n), -1, dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            lower = np.flatnonzero(leq[:, x] & leq[:, y])
            for g in lower:
                if leq[lower, g].all():
                    out[x, y] = out[y, x] = g
                    break
    return out


def join_table(leq) -> np.ndarray:
    return meet_table(np.asarray(leq, dtype=bool).T)


def derive_implication(leq, mult, join=None) -> np.ndarray:
    """``x -> y`` as the join of ``{a : x*a <= y}``.

    Raises :class:`ResidualMissing` when that join does not itself satisfy
    ``x * join <= y``.
    """
    leq = np.asarray(leq, dtype=bool)
    mult = np.asarray(mult, dtype=np.int64)
    if join is None:
        join = join_table(leq)
    n = leq.shape[0]
    impl = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        row = mult[x]
        ok = leq[row]  # ok[a, y]: x*a <= y
        for y in range(n):
            t = 0
            for a in np.flatnonzero(ok[:, y]):
                t = join[t, a]
            if not leq[row[t], y]:
                raise ResidualMissing(x, y)
            impl[x, y] = t
    return impl


def check(leq, mult, impl=None) -> ValidationReport:
    """Check every axiom and return the full list of violations."""
    rep = ValidationReport()
    leq = np.asarray(leq)
    mult = np.asarray(mult)
    n = leq.shape[0] if leq.ndim == 2 else 0
    if n < 1 or leq.shape != (n, n) or mult.shape != (n, n):
        raise ValueError("order and multiplication must be square tables of equal size n >= 1")
    if impl is not None and np.asarray(impl).shape != (n, n):
        raise ValueError("implication table has the wrong shape")
    leq = leq.astype(bool)
    mult = mult.astype(np.int64)
    top = n - 1

    for x in np.flatnonzero(~np.diag(leq)):
        rep.add("order.reflexive", x)
    for x, y in zip(*np.nonzero(leq & leq.T & ~np.eye(n, dtype=bool))):
        if x < y:
            rep.add("order.antisymmetric", x, y)
    li = leq.astype(np.int64)
    for x, y in zip(*np.nonzero(((li @ li) > 0) & ~leq)):
        z = int(np.flatnonzero(leq[x] & leq[:, y])[0])
        rep.add("order.transitive", x, z, y)
    for x in np.flatnonzero(~leq[0]):
        rep.add("order.bottom", x)
    for x in np.flatnonzero(~leq[:, top]):
        rep.add("order.top", x)
    if not rep.ok:
        return rep

    meet = meet_table(leq)
    join = join_table(leq)
    for x, y in zip(*np.nonzero(join < 0)):
        if x < y:
            rep.add("lattice.join", x, y)
    for x, y in zip(*np.nonzero(meet < 0)):
        if x < y:
            rep.add("lattice.meet", x, y)
    for x, y in zip(*np.nonzero((mult < 0) | (mult >= n))):
        rep.add("mult.range", x, y)
    if not rep.ok:
        return rep

    for x, y in zip(*np.nonzero(mult != mult.T)):
        if x < y:
            rep.add("mult.commutative", x, y)
    for x in range(n):
        if mult[x, top] != x:
            rep.add("mult.unit", x, top)
        elif mult[top, x] != x:
            rep.add("mult.unit", top, x)
    idx = np.arange(n)
    left = mult[mult[:, :, None], idx[None, None, :]]
    right = mult[idx[:, None, None], mult[None, :, :]]
    for x, y, z in zip(*np.nonzero(left != right)):
        rep.add("mult.associative", x, y, z)
    for x, y in zip(*np.nonzero(~leq[mult, meet])):
        rep.add("mult.integral", x, y)

    # residuation: x*y <= z  iff  x <= y->z
    try:
        derived = derive_implication(leq, mult, join)
    except ResidualMissing as exc:
        rep.add("residual.missing", exc.x, exc.y)
        derived = None
    if impl is not None:
        impl = np.asarray(impl, dtype=np.int64)
        for x, y in zip(*np.nonzero((impl < 0) | (impl >= n))):
            rep.add("impl.range", x, y)
        if "impl.range" not in rep.axioms():
            lhs = leq[mult[:, :, None], idx[None, None, :]]  # x*y <= z
            rhs = leq[idx[:, None, None], impl[None, :, :]]  # x <= y->z
            for x, y, z in zip(*np.nonzero(lhs != rhs)):
                rep.add("adjunction", x, y, z)
            if derived is not None:
                for x, y in zip(*np.nonzero(impl != derived)):
                    rep.add("impl.mismatch", x, y)
    elif derived is not None:
        lhs = leq[mult[:, :, None], idx[None, None, :]]
        rhs = leq[idx[:, None, None], derived[None, :, :]]
        for x, y, z in zip(*np.nonzero(lhs != rhs)):
            rep.add("adjunction", x, y, z)
    return rep


def build(leq, mult, impl=None, names=None) -> ResiduatedLattice:
    """Validate the tables and return the algebra.

    Raises :class:`ValidationError` carrying the full report on failure.
    """
    n = np.asarray(leq).shape[0]
    names = tuple(names) if names is not None else default_names(n)
    if len(names) != n:
        raise ValueError(f"expected {n} element names, got {len(names)}")
    rep = check(leq, mult, impl)
    if not rep.ok:
        raise ValidationError(rep, names)
    leq = np.asarray(leq, dtype=bool)
    mult = np.asarray(mult, dtype=np.int64)
    if impl is None:
        impl = derive_implication(leq, mult)
    return ResiduatedLattice(_freeze(leq, bool), _freeze(mult, np.int64), _freeze(impl, np.int64), names)


def negation(A: ResiduatedLattice, x: int) -> int:
    return int(A.impl[x, 0])


def classify(A: ResiduatedLattice) -> ClassFlags:
    n = A.size
    top = A.top
    impl, mult, join, meet = A.impl, A.mult, A.join, A.meet
    idx = np.arange(n)
    prelinear = bool((join[impl, impl.T] == top).all())
    divisible = bool((mult[idx[:, None], impl] == meet).all())
    neg = impl[:, 0]
    involutive = bool((neg[neg] == idx).all())
    idempotent = bool((np.diag(mult) == idx).all())
    return ClassFlags(prelinear, divisible, involutive, idempotent)


def relabel(A: ResiduatedLattice, perm: Sequence[int], names=None) -> ResiduatedLattice:
    """Image of ``A`` under the bijection ``x -> perm[x]`` (bottom and top fixed)."""
    n = A.size
    perm = np.asarray(perm, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(n)) or perm[0] != 0 or perm[n - 1] != n - 1:
        raise ValueError("perm must be a bijection fixing bottom and top")
    inv = np.argsort(perm)
    leq = A.leq[np.ix_(inv, inv)]
    mult = perm[A.mult[np.ix_(inv, inv)]]
    impl = perm[A.impl[np.ix_(inv, inv)]]
    if names is None:
        names = tuple(A.names[i] for i in inv)
    return ResiduatedLattice(_freeze(leq, bool), _freeze(mult, np.int64), _freeze(impl, np.int64), tuple(names))


def _canonical(A: ResiduatedLattice):
    code, labs = minimal_order_labelings(A.leq)
    n = A.size
    best = None
    best_labs = []
    mult = A.mult
    for lab in labs:
        pos = [0] * n
        for p, e in enumerate(lab):
            pos[e] = p
        mcode = tuple(pos[mult[lab[i], lab[j]]] for i in range(n) for j in range(i, n))
        if best is None or mcode < best:
            best = mcode
            best_labs = [lab]
        elif mcode == best:
            best_labs.append(lab)
    return code, best, best_labs


def canonical_form(A: ResiduatedLattice) -> bytes:
    """Byte string that is equal for two algebras iff they are isomorphic."""
    code, mcode, _ = _canonical(A)
    return bytes([A.size]) + order_code_bytes(code) + bytes(mcode)


def canonical_labeling(A: ResiduatedLattice) -> list:
    """One labeling (position -> element) realising :func:`canonical_form`."""
    return _canonical(A)[2][0]


def are_isomorphic(A: ResiduatedLattice, B: ResiduatedLattice) -> Optional[list]:
    """Return ``phi`` with ``phi[x]`` the image in ``B`` of ``x`` in ``A``, or None."""
    if A.size != B.size:
        return None
    ca, ma, la = _canonical(A)
    cb, mb, lb = _canonical(B)
    if ca != cb or ma != mb:
        return None
    phi = [0] * A.size
    for a, b in zip(la[0], lb[0]):
        phi[a] = b
    return phi
