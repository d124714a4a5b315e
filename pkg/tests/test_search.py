from itertools import product
from math import factorial

import pytest

from neardomain.core import cyclic_group, dihedral_group, klein_group
from neardomain.equivalence import f_map
from neardomain.fields import field_of_order, mul_group_of_field
from neardomain.near_domain import validate_near_domain
from neardomain.phi import PhiSystem, standard_phi_system
from neardomain.search import (
    ExampleSpec,
    make_example,
    nearfield_census,
    search_phi,
    standard_examples,
    verify_example_formulas,
)
from oracles import brute_force_phi_count, triple_check_associative


def test_scaling_gf5_value():
    # -1 * 2^-1 + 1 = -3 + 1 = -2 = 3 mod 5
    assert make_example(ExampleSpec(5, "scaling", 2)).plus(1, 1) == 3


def test_inverse_gf5_value():
    # 1 * 2^2 + 2 = 6 = 1 mod 5
    assert make_example(ExampleSpec(5, "inverse")).plus(1, 2) == 1


def test_scaling_a1_gf3():
    D = make_example(ExampleSpec(3, "scaling", 1))
    for x, y in product(range(3), range(1, 3)):
        assert D.plus(x, y) == (y - x) % 3
    assert all(D.minus(x, x) == 0 for x in range(1, 3))


def test_example_spec_errors():
    with pytest.raises(ValueError):
        ExampleSpec(5, "scaling", 0)
    with pytest.raises(ValueError):
        ExampleSpec(5, "cubic")


@pytest.mark.parametrize("spec", standard_examples(5) + standard_examples(7) + standard_examples(4),
                         ids=str)
def test_examples_are_right_near_domains(spec):
    rep, _ = validate_near_domain(make_example(spec))
    assert rep.ok, rep.format()


@pytest.mark.parametrize("q", [3, 5, 7])
def test_examples_match_f_map(q):
    # the closed forms coincide with F_L applied to phi(x) = 1 - x
    S = standard_phi_system(field_of_order(q))
    for spec in standard_examples(q):
        D = make_example(spec)
        assert f_map(S, D.L) == D


def verified(spec):
    D = make_example(spec)
    rep, W = validate_near_domain(D)
    return verify_example_formulas(spec, D, W), W


def test_scaling_gf7_a3_v():
    rep, W = verified(ExampleSpec(7, "scaling", 3))
    assert rep.ok
    # 3^-2 = 9^-1 = 2^-1 = 4 mod 7
    assert set(W.v.values()) == {4}
    # -3^-1 = -5 = 2 mod 7
    assert set(W.r.values()) == {2}


def test_inverse_gf5_h():
    rep, W = verified(ExampleSpec(5, "inverse"))
    assert rep.checks["h(y,z) = z^-1"] is None
    assert len(W.h) == 16


def test_inverse_family_r_formula_disagrees_with_witness():
    rep, W = verified(ExampleSpec(5, "inverse"))
    # the stated formula at (2, 1): 4 * 1 * 3^-1 * 3 = 4, the witness is 1
    assert W.r[2, 1] == 1
    assert rep.checks["r(y,z) = y^2 z (z+y)^-1 (yz+1)"] is not None


@pytest.mark.parametrize("q", [5, 7, 9])
def test_inverse_family_r_closed_form(q):
    # from A6: xy^2z^2 + yz^2 + z = x r z^2 (yz+1)^2 + z(yz+1), so r = y^2 (yz+1)^-2
    F = field_of_order(q)
    _, W = verified(ExampleSpec(q, "inverse"))
    for (y, z), r in W.r.items():
        d = F.add(F.mul(y, z), 1)
        assert r == F.mul(F.mul(y, y), F.inv(F.mul(d, d)))


@pytest.mark.parametrize("group", [cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_group()],
                         ids=["C2", "C3", "C4", "V4"])
def test_search_counts_match_brute_force(group):
    res = search_phi(group, classify_all=False)
    oracle = brute_force_phi_count(group)
    assert sorted(res.all_phis) == sorted(oracle)
    assert not res.derived_failures


@pytest.mark.slow
@pytest.mark.parametrize("group", [cyclic_group(6), dihedral_group(3)], ids=["C6", "S3"])
def test_search_counts_match_brute_force_n7(group):
    res = search_phi(group, classify_all=False)
    assert sorted(res.all_phis) == sorted(brute_force_phi_count(group))


def test_search_c2_single_survivor():
    res = search_phi(cyclic_group(2))
    assert res.all_phis == [(1, 0, 2)]


def test_search_c4_contains_one_minus_x():
    res = search_phi(mul_group_of_field(field_of_order(5)))
    assert (1, 0, 4, 3, 2) in res.all_phis
    assert len(res.phi_list) == 1


def test_search_klein_is_empty():
    res = search_phi(klein_group())
    assert res.all_phis == [] and res.rows == []
    census = nearfield_census(res)
    assert census.rows == [] and census.format() == "census: 0 (phi, L) pairs"


def test_search_cap():
    with pytest.raises(ValueError, match="cap"):
        search_phi(cyclic_group(7))
    assert search_phi(cyclic_group(7), cap=8, classify_all=False).all_phis


@pytest.mark.parametrize("q", [3, 4, 5])
def test_census_flags_agree_with_triple_check(q):
    res = search_phi(mul_group_of_field(field_of_order(q)))
    census = nearfield_census(res)
    assert len(census.rows) == len(res.phi_list) * factorial(q - 1)
    for row in census.rows:
        D = f_map(PhiSystem(res.group_used, res.phi_list[row.phi_index]), row.L)
        assert row.flags["additive_associative"] == triple_check_associative([list(r) for r in D.add])
        assert row.axioms_ok
    assert census.near_domain_not_nearfield == []


def test_census_gf3():
    census = nearfield_census(search_phi(cyclic_group(2)))
    # L = (1, 2) gives x + y = y - x, which is not associative: (1+2)+1 = 0, 1+(2+1) = 1
    assoc = {row.L: row.flags["additive_associative"] for row in census.rows}
    assert assoc == {(1, 2): False, (2, 1): True}


def test_census_csv():
    census = nearfield_census(search_phi(cyclic_group(2)))
    lines = census.to_csv().splitlines()
    assert lines[0].startswith("phi_index,L,axioms_ok,additive_associative")
    assert len(lines) == 3
    assert lines[2].startswith("0,2 1,1,1")
