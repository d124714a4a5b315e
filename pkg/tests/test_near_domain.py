from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neardomain import io
from neardomain.core import StructureError
from neardomain.fields import field_of_order
from neardomain.near_domain import (
    NearDomain,
    classify,
    field_near_domain,
    lemma_closed_forms,
    validate_near_domain,
)
from neardomain.search import ExampleSpec, make_example


def test_gf3_field_passes_with_trivial_witnesses():
    rep, W = validate_near_domain(field_near_domain(field_of_order(3)))
    assert rep.ok
    assert all(h == z for (y, z), h in W.h.items())
    assert set(W.r.values()) == {1}
    assert set(W.v.values()) == {1}
    # cells with y + z = 0 carry no r witness
    assert set(W.r) == {(1, 1), (2, 2)}


def test_gf5_inverse_family_h_is_z_inverse():
    F = field_of_order(5)
    rep, W = validate_near_domain(make_example(ExampleSpec(5, "inverse")))
    assert rep.ok
    assert all(h == F.inv(z) for (y, z), h in W.h.items())
    assert len(W.h) == 16


def test_corrupted_cell_is_reported(data):
    D = io.load(data / "gf3_nd_corrupted.json")
    rep, _ = validate_near_domain(D)
    assert not rep.ok
    # the corrupted cell is 0 + 1; A2 reads it directly, A1 via (1 - 1) + 1
    assert rep.checks["A2"].cell == (0, 1)
    assert rep.checks["A1"].cell == (1, 1)


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_lemma_on_fields(q):
    D = field_near_domain(field_of_order(q))
    rep, W = validate_near_domain(D)
    assert rep.ok
    lem = lemma_closed_forms(D, W)
    assert lem.ok, lem.format()
    F = field_of_order(q)
    for x, z in product(range(q), range(1, q)):
        assert D.minus(x, z) == F.add(x, F.neg(z))


def test_v_for_inverse_family_gf5():
    D = make_example(ExampleSpec(5, "inverse"))
    rep, W = validate_near_domain(D)
    assert set(W.v.values()) == {1}
    assert lemma_closed_forms(D, W).ok


def test_v_for_scaling_a3_gf7():
    # v(z) = E(L^2 z) z = (9z)^-1 z = 2^-1 = 4 mod 7
    D = make_example(ExampleSpec(7, "scaling", 3))
    rep, W = validate_near_domain(D)
    assert rep.ok
    assert set(W.v.values()) == {4}
    assert lemma_closed_forms(D, W).ok


def test_nonzero_zero_row_is_rejected():
    D = field_near_domain(field_of_order(3))
    bad = NearDomain(D.group, D.add, D.sub, D.L, zero_row=(1, 2))
    rep, _ = validate_near_domain(bad)
    assert not rep.ok
    assert "zero_mul" in bad.to_dict()


def test_structural_errors():
    D = field_near_domain(field_of_order(3))
    with pytest.raises(StructureError):
        NearDomain(D.group, D.add, D.sub, (1, 1))
    with pytest.raises(StructureError):
        NearDomain(D.group, D.add[:2], D.sub, D.L)
    with pytest.raises(StructureError):
        NearDomain(D.group, ((1, 2), (2, 0), (0, 3)), D.sub, D.L)


def test_classify_field():
    c = classify(field_near_domain(field_of_order(3)))
    assert all(c.flags().values())
    assert c.nearfield_candidate


def test_classify_scaling_gf5():
    c = classify(make_example(ExampleSpec(5, "scaling", 2)))
    assert c.right_distributive and c.left_distributive and c.l_additive
    assert not c.additive_associative


def test_classify_inverse_gf5():
    D = make_example(ExampleSpec(5, "inverse"))
    c = classify(D)
    assert not c.l_additive
    assert c.symmetric_zero
    for x in range(1, 5):
        assert D.plus(D.left_inv(x), x) == 0 == D.plus(x, D.left_inv(x))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([3, 4, 5, 7]), st.data())
def test_single_add_cell_corruption_fails(q, data):
    D = field_near_domain(field_of_order(q))
    x = data.draw(st.integers(0, q - 1))
    y = data.draw(st.integers(1, q - 1))
    wrong = data.draw(st.integers(0, q - 1).filter(lambda v: v != D.plus(x, y)))
    add = [list(r) for r in D.add]
    add[x][y - 1] = wrong
    rep, _ = validate_near_domain(NearDomain(D.group, add, D.sub, D.L))
    assert not rep.ok
