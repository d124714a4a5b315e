from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neardomain import io
from neardomain.core import StructureError, ValidationFailed, cyclic_group, klein_group
from neardomain.equivalence import (
    a_map,
    bijections,
    f_map,
    is_phi_iso,
    iso_check_near_domain,
    iso_check_phi,
    roundtrip_near_domain,
    roundtrip_phi,
    transport_phi,
)
from neardomain.fields import field_of_order
from neardomain.near_domain import (
    NearDomain,
    field_near_domain,
    lemma_closed_forms,
    validate_near_domain,
)
from neardomain.phi import PhiSystem, standard_phi_system, validate_phi
from neardomain.search import ExampleSpec, make_example


def std(q):
    return standard_phi_system(field_of_order(q))


def test_a_map_gf3_field():
    S = a_map(field_near_domain(field_of_order(3)))
    assert S.phi == (1, 0, 2)


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_a_map_phi_e_is_zero(q):
    S = a_map(field_near_domain(field_of_order(q)))
    assert S.phi[1] == 0
    assert S == std(q)


def test_a_map_scaling_family_gf5():
    # oracle: a' = 0 (-) 1 = 2*1 = 2 and phi(x) = (2x) (+) 1 = -2x*2^-1 + 1 = 1 - x
    D = make_example(ExampleSpec(5, "scaling", 2))
    assert D.minus(0, 1) == 2
    S = a_map(D)
    assert validate_phi(S).ok
    assert S.phi == tuple((1 - x) % 5 for x in range(5))


def test_a_map_rejects_invalid(data):
    with pytest.raises(ValidationFailed):
        a_map(io.load(data / "gf3_nd_corrupted.json"))


def test_f_map_identity_L_gf3():
    D = f_map(std(3), (1, 2))
    for x, y in product(range(3), range(1, 3)):
        assert D.plus(x, y) == (y - x) % 3
    rep, _ = validate_near_domain(D)
    assert all(rep.checks[a] is None for a in ("A1", "A2", "A3"))


def test_f_map_negation_recovers_field_addition():
    D = f_map(std(3), (2, 1))
    for x, y in product(range(3), range(1, 3)):
        assert D.plus(x, y) == (x + y) % 3


@pytest.mark.parametrize("q", [3, 4, 5])
def test_zero_plus_y_is_y(q):
    S = std(q)
    for L in bijections(q):
        D = f_map(S, L)
        assert all(D.plus(0, y) == y for y in range(1, q))


def test_f_map_rejects_non_bijection():
    with pytest.raises(StructureError):
        f_map(std(3), (1, 1))


def test_iso_self_is_identity():
    S = std(5)
    assert iso_check_phi(S, S).map == tuple(range(5))


def test_iso_gf3_only_identity():
    assert iso_check_phi(std(3), std(3)).map == (0, 1, 2)


@settings(max_examples=25, deadline=None)
@given(st.permutations([2, 3, 4]))
def test_iso_finds_relabeling_gf5(perm):
    m = (0, 1, *perm)
    S = std(5)
    T = transport_phi(S, m)
    w = iso_check_phi(S, T)
    assert w is not None and w.kind == "phi-system-iso"
    # GF(5) has no nontrivial phi-system automorphism, so the witness is the relabeling
    assert w.map == m


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([8, 9]), st.data())
def test_iso_finds_some_witness_larger(q, data):
    S = std(q)
    perm = data.draw(st.permutations(list(range(2, q))))
    T = transport_phi(S, (0, 1, *perm))
    w = iso_check_phi(S, T)
    assert w is not None and is_phi_iso(S, T, w.map)


def test_iso_none_for_different_groups():
    S = PhiSystem(cyclic_group(4), (1, 0, 2, 4, 3))
    T = PhiSystem(klein_group(), (1, 0, 2, 4, 3))
    assert iso_check_phi(S, T) is None
    assert iso_check_phi(S, std(3)) is None


def test_iso_near_domain():
    D = field_near_domain(field_of_order(5))
    w = iso_check_near_domain(D, D)
    assert w.map == tuple(range(5)) and w.kind == "near-domain-iso"
    E = make_example(ExampleSpec(5, "scaling", 2))
    assert iso_check_near_domain(D, E) is None


def test_roundtrip_phi_gf3_both_L():
    out = roundtrip_phi(std(3))
    assert out.tried == 2 and out.ok


def test_roundtrip_near_domain_gf3():
    D = field_near_domain(field_of_order(3))
    S = a_map(D)
    assert f_map(S, D.L) == D
    other = f_map(S, (1, 2))
    assert other.add != D.add
    out = roundtrip_near_domain(D)
    assert out.ok and out.tried == 2


def test_a_after_f_is_exact():
    S = std(5)
    for L in bijections(5):
        assert a_map(f_map(S, L)) == S


@settings(max_examples=20, deadline=None)
@given(st.permutations(list(range(1, 7))))
def test_f_map_gf7_random_L(L):
    S = std(7)
    D = f_map(S, tuple(L))
    rep, W = validate_near_domain(D)
    assert rep.ok, rep.format()
    assert lemma_closed_forms(D, W).ok
    E = D.E
    for x, z in product(range(7), range(1, 7)):
        # (x + L(z)) + z = x E(L^2 z) z
        assert D.plus(D.plus(x, D.left_inv(z)), z) == D.mul(x, D.group.prod(E(D.left_inv(D.left_inv(z))), z))


def test_roundtrip_near_domain_gf4():
    D = field_near_domain(field_of_order(4))
    out = roundtrip_near_domain(D)
    assert out.ok and out.tried == 6


def test_transport_requires_fixed_constants():
    with pytest.raises(StructureError):
        transport_phi(std(3), (1, 0, 2))


def test_near_domain_equality_includes_L():
    D = field_near_domain(field_of_order(3))
    assert D != NearDomain(D.group, D.add, D.sub, (1, 2))
