from itertools import product

import pytest

from neardomain.core import validate_group
from neardomain.fields import MODULI, field_make, field_of_order, mul_group_of_field, prime_power
from oracles import egcd_inverse, gf4_mul, poly_is_irreducible


def test_gf3_addition():
    F = field_make(3, 1)
    assert F.add(1, 2) == 0


def test_gf4_x_squared():
    F = field_make(2, 2)
    x = 2  # the polynomial x
    assert F.mul(x, x) == 3  # x + 1
    for a, b in product(range(4), repeat=2):
        assert F.mul(a, b) == gf4_mul(a, b)
        assert F.add(a, b) == a ^ b


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_prime_field_inverse_matches_euclid(p):
    F = field_make(p)
    for a in range(1, p):
        assert F.inv(a) == egcd_inverse(a, p)


def test_gf5_inverse_of_2():
    assert field_make(5).inv(2) == 3


@pytest.mark.parametrize("pk", sorted(MODULI))
def test_pinned_moduli_are_irreducible(pk):
    p, _ = pk
    assert poly_is_irreducible(list(MODULI[pk]), p)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    els = list(F.elements())
    for a, b in product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
    for a, b, c in product(els, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", [25, 27, 32, 49, 64])
def test_larger_fields_have_cyclic_unit_group(q):
    F = field_of_order(q)
    orders = []
    for a in range(1, q):
        k, b = 1, a
        while b != 1:
            b, k = F.mul(b, a), k + 1
        orders.append(k)
    assert max(orders) == q - 1


@pytest.mark.parametrize("q, order", [(3, 2), (4, 3), (5, 4), (9, 8)])
def test_mul_group_of_field(q, order):
    g = mul_group_of_field(field_of_order(q))
    assert g.order == order
    assert validate_group(g).ok
    assert g.unit == 1


def test_gf3_group_is_c2():
    g = mul_group_of_field(field_of_order(3))
    assert g.mul == ((1, 2), (2, 1))


@pytest.mark.parametrize("args", [(4, 1), (6, 1), (11, 2), (2, 7)])
def test_field_make_errors(args):
    with pytest.raises(ValueError):
        field_make(*args)


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    with pytest.raises(ValueError):
        prime_power(12)
