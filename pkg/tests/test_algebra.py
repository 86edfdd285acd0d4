import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reslat.algebra import (ResidualMissing, ValidationError, are_isomorphic, build, canonical_form, check,
                            classify, derive_implication, relabel)
from reslat.formats import parse_tables


def chain_leq(n):
    i = np.arange(n)
    return i[:, None] <= i[None, :]


def lukasiewicz(n):
    i = np.arange(n)
    return build(chain_leq(n), np.maximum(0, i[:, None] + i[None, :] - (n - 1)))


def goedel(n):
    i = np.arange(n)
    return build(chain_leq(n), np.minimum(i[:, None], i[None, :]))


def m3_leq():
    leq = np.eye(5, dtype=bool)
    leq[0, :] = True
    leq[:, 4] = True
    return leq


def m3_meet_mult():
    mult = np.zeros((5, 5), dtype=np.int64)
    for x in range(5):
        mult[x, x] = x
        mult[x, 4] = mult[4, x] = x
    return mult


# -- construction and validation -------------------------------------------------

def test_two_element_boolean_algebra():
    A = build(chain_leq(2), [[0, 0], [0, 1]])
    assert A.names == ("0", "1")
    assert A.impl.tolist() == [[1, 1], [0, 1]]
    assert all(classify(A).as_dict().values())


def test_trivial_algebra():
    A = build([[True]], [[0]])
    assert A.size == 1 and A.top == 0
    assert classify(A).mv


def test_chain_classes():
    L = classify(lukasiewicz(4))
    assert L.mv and L.bl and not L.idempotent and not L.godel
    G = classify(goedel(4))
    assert G.godel and G.heyting and not G.mv


def test_derived_implication_on_lukasiewicz_chain():
    n = 5
    A = lukasiewicz(n)
    i = np.arange(n)
    expected = np.minimum(n - 1, (n - 1) - i[:, None] + i[None, :])
    assert (A.impl == expected).all()


def test_residual_missing_on_m3_with_meet():
    # M3 with x*y = x meet y is not residuated: the lattice is not distributive
    with pytest.raises(ResidualMissing) as exc:
        derive_implication(m3_leq(), m3_meet_mult())
    x, y = exc.value.x, exc.value.y
    assert x in (1, 2, 3)
    rep = check(m3_leq(), m3_meet_mult())
    assert "residual.missing" in rep.axioms()


def test_non_lattice_order_rejected():
    # 0 < a, b < c, d < 1 : a and b have two minimal upper bounds
    leq = np.eye(6, dtype=bool)
    leq[0, :] = True
    leq[:, 5] = True
    for lo in (1, 2):
        for hi in (3, 4):
            leq[lo, hi] = True
    mult = np.zeros((6, 6), dtype=np.int64)
    mult[5, :] = np.arange(6)
    mult[:, 5] = np.arange(6)
    rep = check(leq, mult)
    assert not rep.ok
    assert rep.axioms() & {"lattice.join", "lattice.meet"}


def test_bad_order_reported():
    leq = chain_leq(3)
    leq[2, 0] = True
    rep = check(leq, np.zeros((3, 3), dtype=np.int64))
    assert "order.antisymmetric" in rep.axioms()


def test_wrong_impl_reported():
    A = lukasiewicz(3)
    impl = A.impl.copy()
    impl[1, 0] = 0
    rep = check(A.leq, A.mult, impl)
    assert "impl.mismatch" in rep.axioms()


def test_non_commutative_and_unit_violations():
    mult = np.array([[0, 0, 0], [0, 0, 2], [0, 1, 2]])
    rep = check(chain_leq(3), mult)
    assert {"mult.commutative", "mult.unit"} <= rep.axioms()
    with pytest.raises(ValidationError) as exc:
        build(chain_leq(3), mult)
    assert "unit law violated at (a,1)" in str(exc.value)


def test_verbatim_printed_table_fails_on_unit_law(load):
    from conftest import fixture_path

    t = parse_tables(fixture_path("mv8_verbatim.lat").read_text())
    rep = check(t["leq"], t["mult"])
    assert "unit law violated at (a,1)" in rep.format(t["names"]).splitlines()


def test_arrays_are_read_only():
    A = lukasiewicz(3)
    with pytest.raises(ValueError):
        A.mult[0, 0] = 1


# -- independent oracles over all small algebras ---------------------------------

def test_adjunction_brute_force(small_algebras):
    for A in small_algebras:
        n = A.size
        for x, y, z in itertools.product(range(n), repeat=3):
            assert A.leq[A.mult[x, y], z] == A.leq[y, A.impl[x, z]]


def test_classify_against_pointwise_definitions(small_algebras):
    for A in small_algebras:
        n, top = A.size, A.top
        m, r, J, M = A.mult, A.impl, A.join, A.meet
        pre = all(J[r[x, y], r[y, x]] == top for x in range(n) for y in range(n))
        div = all(M[x, y] == m[x, r[x, y]] for x in range(n) for y in range(n))
        inv = all(r[r[x, 0], 0] == x for x in range(n))
        idem = all(m[x, x] == x for x in range(n))
        f = classify(A)
        assert (f.prelinear, f.divisible, f.involutive, f.idempotent) == (pre, div, inv, idem)
        assert f.godel == (pre and div and idem)
        assert f.mv == (pre and div and inv)


def test_integrality_and_commutativity(small_algebras):
    for A in small_algebras:
        assert (A.mult == A.mult.T).all()
        assert A.leq[A.mult, A.meet].all()


# -- canonical forms ------------------------------------------------------------

def _random_perm(n, data):
    inner = data.draw(st.permutations(list(range(1, n - 1))))
    return [0] + list(inner) + [n - 1]


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_canonical_form_is_relabel_invariant(small_algebras, data):
    A = data.draw(st.sampled_from(small_algebras))
    perm = _random_perm(A.size, data) if A.size > 1 else [0]
    B = relabel(A, perm)
    assert canonical_form(A) == canonical_form(B)
    phi = are_isomorphic(A, B)
    assert phi is not None
    for x in range(A.size):
        for y in range(A.size):
            assert B.mult[phi[x], phi[y]] == phi[A.mult[x, y]]
            assert B.leq[phi[x], phi[y]] == A.leq[x, y]


def test_relabel_rejects_moving_bounds():
    with pytest.raises(ValueError):
        relabel(lukasiewicz(3), [1, 0, 2])


def test_distinct_forms_within_a_size(small_algebras):
    forms = [canonical_form(A) for A in small_algebras]
    assert len(set(forms)) == len(forms)


def test_non_isomorphic_same_lattice():
    assert are_isomorphic(lukasiewicz(4), goedel(4)) is None
