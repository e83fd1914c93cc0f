import random

import pytest
from hypothesis import given, settings, strategies as st

from inv4perm import gf2n
from inv4perm.gf2n import CONWAY, FieldError, FieldSpec, get_field

from oracles import CONWAY_6, clmul_mod, inverse_by_search, power, trace_by_sum

EVEN = [6, 8, 10, 12, 14, 16, 18, 20]


def test_builtin_fields_are_conway_and_primitive():
    for n in EVEN:
        f = get_field(n)
        assert f.poly == CONWAY[n]
        assert f.xi == 0b10
        assert gf2n.is_irreducible(f.poly)


def test_default_n6_representation():
    f = get_field(6)
    assert f.poly == CONWAY_6
    assert f.to_config() == "n=6, poly=5b, xi=2"


def test_rejects_reducible_and_non_primitive():
    with pytest.raises(FieldError):
        FieldSpec(6, 0b1000001)  # X^6 + 1
    # X^6 + X^4 + X^2 + X + 1 is irreducible but X has order 21
    assert gf2n.is_irreducible(0b1010111)
    with pytest.raises(FieldError):
        FieldSpec(6, 0b1010111)


def test_config_round_trip():
    f = get_field(10)
    assert FieldSpec.from_config(f.to_config()) == f
    alt = FieldSpec.from_config("n=6, poly=43, xi=2")  # X^6 + X + 1
    assert alt.n == 6 and alt.poly == 0x43


def test_add(f6):
    xi = f6.generator
    x = f6(0b101101)
    assert gf2n.add(x, f6.zero) == x
    assert gf2n.add(x, x) == f6.zero
    assert gf2n.add(xi, xi ** 2).value == 0b110


def test_add_mismatched_fields(f6, f8):
    with pytest.raises(FieldError):
        gf2n.add(f6(3), f8(3))


def test_mul_examples(f6):
    xi = f6.generator
    y = f6(0b110011)
    assert gf2n.mul(f6.zero, y) == f6.zero
    assert gf2n.mul(f6.one, y) == y
    # oracle: 62 repeated products with a table-free multiply
    assert power(2, 62, CONWAY_6) == gf2n.pow(xi, 62).value
    assert gf2n.mul(xi, gf2n.pow(xi, 62)) == f6.one


def test_mul_matches_clmul_exhaustive(f6):
    for x in range(64):
        for y in range(64):
            assert f6.mul(x, y) == clmul_mod(x, y, CONWAY_6)


def test_inv(f6):
    assert gf2n.inv(f6.zero) == f6.zero
    assert gf2n.inv(f6.one) == f6.one
    assert gf2n.inv(f6.generator).value == inverse_by_search(2, CONWAY_6)
    assert gf2n.inv(f6.generator) == f6.generator ** 62


@pytest.mark.parametrize("n", EVEN)
def test_two_inversion_algorithms_agree(n):
    f = get_field(n)
    rng = random.Random(n)
    for _ in range(1000):
        x = rng.randrange(1, f.size)
        y = f.inv(x)
        assert y == f.inv_euclid(x)
        assert f.mul(x, y) == 1


def test_pow(f6):
    xi = f6.generator
    assert gf2n.pow(f6(0b1011), 0) == f6.one
    assert gf2n.pow(f6.zero, 0) == f6.one
    assert gf2n.pow(xi, 63) == f6.one
    assert power(2, 63, CONWAY_6) == 1
    for e in range(0, 200, 7):
        assert f6.pow(5, e) == f6.pow_naive(5, e)


def test_trace_examples(f6):
    assert gf2n.trace(f6.zero) == 0
    assert gf2n.trace(f6.one) == 0
    assert sum(f6.trace(x) == 0 for x in range(64)) == 32
    for x in range(64):
        assert f6.trace(x) == trace_by_sum(x, CONWAY_6) == f6.trace_power_sum(x)


@pytest.mark.parametrize("n", [6, 8, 10, 12, 14])
def test_trace_balanced_and_linear(n):
    f = get_field(n)
    tr = f.trace_table
    assert int((tr == 0).sum()) == f.size // 2
    rng = random.Random(n)
    for _ in range(500):
        x, y = rng.randrange(f.size), rng.randrange(f.size)
        assert f.trace(x ^ y) == f.trace(x) ^ f.trace(y)


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_trace_frobenius_invariant(n):
    f = get_field(n)
    x = f.elements
    assert (f.trace_vec(f.mul_vec(x, x)) == f.trace_table).all()


@pytest.mark.parametrize("n", [6, 8, 10, 12, 14])
def test_powers_of_xi_enumerate_group(n):
    f = get_field(n)
    powers = f.exp_table[: f.order]
    assert sorted(powers.tolist()) == list(range(1, f.size))


def test_element_of_order_3(f6):
    w = gf2n.element_of_order_3(f6)
    assert w == f6.generator ** 21
    assert w ** 3 == f6.one and w != f6.one
    assert gf2n.add(gf2n.add(w ** 2, w), f6.one) == f6.zero
    with pytest.raises(FieldError):
        gf2n.element_of_order_3(get_field(7))


def test_discrete_log(f6):
    assert gf2n.discrete_log(f6.one) == 0
    assert gf2n.discrete_log(f6.generator) == 1
    assert gf2n.discrete_log(f6.generator ** 21) == 21
    with pytest.raises(FieldError):
        gf2n.discrete_log(f6.zero)


def test_linear_mask_represents_trace_form(f8):
    rng = random.Random(1)
    for _ in range(50):
        b = rng.randrange(1, f8.size)
        m = f8.linear_mask(b)
        for y in range(f8.size):
            assert f8.trace(f8.mul(b, y)) == bin(y & m).count("1") % 2


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
def test_field_axioms(x, y, z):
    f = get_field(8)
    assert f.mul(x, y) == f.mul(y, x)
    assert f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z))
    assert f.mul(x, y ^ z) == f.mul(x, y) ^ f.mul(x, z)
