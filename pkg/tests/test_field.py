import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import PolyField
from toricgraph.errors import DivisionByZero, FieldMismatch, NonPrime, ReducibleModulus, UnsupportedQ
from toricgraph.field import (FieldSpec, field_new, inv, is_irreducible, mul, parse_q, power,
                              smallest_irreducible, units)

SMALL = [(3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2)]


def test_prime_field_generator():
    f = field_new(5, 1)
    assert f.q == 5 and f.generator == 2
    # smallest element of full order, by brute force
    orders = {x: min(e for e in range(1, 5) if pow(x, e, 5) == 1) for x in range(1, 5)}
    assert f.generator == min(x for x, o in orders.items() if o == 4)


def test_gf4_given_modulus():
    f = field_new(2, 2, [1, 1, 1])
    assert f.q == 4
    alpha = 2  # encodes x
    assert f.mul(alpha, alpha) == 3  # x^2 = x + 1


@pytest.mark.parametrize("p,m", [(2, 1), (2, 17), (257, 2)])
def test_unsupported_q(p, m):
    with pytest.raises(UnsupportedQ):
        field_new(p, m)


def test_non_prime_and_reducible():
    with pytest.raises(NonPrime):
        field_new(4, 1)
    with pytest.raises(ReducibleModulus):
        field_new(2, 2, [1, 0, 1])  # x^2 + 1 = (x + 1)^2
    with pytest.raises(ReducibleModulus):
        field_new(2, 2, [1, 1, 0])  # not monic of degree 2


def test_parse_q():
    assert parse_q("2^3") == (2, 3)
    assert parse_q("9") == (3, 2)
    assert parse_q("5") == (5, 1)
    with pytest.raises(NonPrime):
        parse_q("6")


def test_smallest_irreducible_is_lexicographic():
    for p, m in [(2, 2), (2, 3), (3, 2), (2, 4)]:
        found = smallest_irreducible(p, m)
        # low-degree-first comparison is plain tuple order on (c0, ..., c_{m-1})
        monics = (tuple(c) + (1,) for c in itertools.product(range(p), repeat=m))
        assert tuple(found) == next(c for c in monics if is_irreducible(c, p))


def test_small_examples():
    f5 = field_new(5)
    assert f5.add(2, 3) == 0
    assert f5.inv(2) == 3
    assert [u.value for u in units(field_new(3))] == [1, 2]
    us = units(f5)
    assert len(us) == 4 and us[0].value == 1
    f4 = field_new(2, 2)
    prod = 1
    for u in units(f4):
        prod = f4.mul(prod, u.value)
    assert len(units(f4)) == 3 and prod == 1


@pytest.mark.parametrize("p,m", SMALL)
def test_tables_against_polynomial_arithmetic(p, m):
    f = FieldSpec(p, m)
    ref = PolyField(p, m, f.modulus)
    q = f.q
    assert f.element_order(f.generator) == q - 1
    for x in range(1, q):
        assert f.exp_table[f.log_table[x]] == x
    for x in range(q):
        for y in range(q):
            assert f.mul(x, y) == ref.mul(x, y)
            assert f.add(x, y) == ref.add(x, y)
            assert f.sub(x, y) == ref.sub(x, y)
    xs, ys = np.meshgrid(np.arange(q), np.arange(q))
    assert np.array_equal(f.vmul(xs, ys), np.vectorize(ref.mul)(xs, ys))
    assert np.array_equal(f.vadd(xs, ys), np.vectorize(ref.add)(xs, ys))
    assert np.array_equal(f.vsub(xs, ys), np.vectorize(ref.sub)(xs, ys))


def test_division_by_zero_and_mismatch():
    f = field_new(5)
    with pytest.raises(DivisionByZero):
        f.inv(0)
    with pytest.raises(DivisionByZero):
        inv(f(0))
    with pytest.raises(FieldMismatch):
        mul(f(1), field_new(7)(1))


def test_to_json_embeds_modulus():
    f = field_new(3, 2)
    j = f.to_json()
    assert j["q"] == 9 and len(j["modulus"]) == 3 and j["modulus"][-1] == 1


fields = st.sampled_from(SMALL).map(lambda pm: FieldSpec(*pm))


@settings(max_examples=60, deadline=None)
@given(fields, st.data())
def test_field_axioms(f, data):
    el = st.integers(0, f.q - 1)
    x, y, z = data.draw(el), data.draw(el), data.draw(el)
    assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
    assert f.add(x, f.neg(x)) == 0
    assert f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z))
    if x:
        assert f.mul(x, f.inv(x)) == 1
        assert power(f(x), f.q - 1).value == 1
