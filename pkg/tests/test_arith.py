from fractions import Fraction

import pytest
from hypothesis import given

from tropdual.arith import (
    EPS,
    INF,
    ONE,
    ZERO,
    DualValue,
    dual_add,
    dual_inverse,
    dual_mul,
    format_dual,
    pi,
    trop_add,
    trop_mul,
    tv,
)
from tropdual.parse import parse_dual

from strategies import dual_values, trop_values


def D(a, b=INF):
    return DualValue(a, b)


@pytest.mark.parametrize(
    "raw, expected",
    [("inf", INF), ("oo", INF), ("∞", INF), ("3/4", Fraction(3, 4)), ("-2", Fraction(-2)), (5, Fraction(5)), (INF, INF)],
)
def test_tv_coercion(raw, expected):
    assert tv(raw) == expected


def test_tv_rejects_nan_and_minus_inf():
    with pytest.raises(ValueError):
        tv(float("nan"))
    with pytest.raises(ValueError):
        tv(-INF)


def test_tropical_operations():
    assert trop_add(Fraction(2), Fraction(3)) == 2
    assert trop_add(INF, Fraction(3)) == 3
    assert trop_mul(Fraction(2), Fraction(3)) == 5
    assert trop_mul(INF, Fraction(-3)) == INF


def test_twisted_product_by_hand():
    # (1 + 2e)(3 + 5e) = min(1+3, 2+5) + min(1+5, 2+3) e
    assert dual_mul(D(1, 2), D(3, 5)) == D(4, 5)
    assert dual_add(D(1, 7), D(3, 5)) == D(1, 5)


def test_eps_squared_is_one():
    assert dual_mul(EPS, EPS) == ONE
    assert dual_mul(ONE, EPS) == EPS


@pytest.mark.parametrize(
    "x, inv",
    [(D(3), D(-3)), (D(INF, 2), D(INF, -2)), (EPS, EPS), (D(1, 2), None), (ZERO, None)],
)
def test_inverse(x, inv):
    assert dual_inverse(x) == inv
    if inv is not None:
        assert dual_mul(x, inv) == ONE


def test_pi_examples():
    assert pi(D(1, 1)) == 1
    assert pi(D(3, 1)) == 1
    assert pi(EPS) == 0
    assert pi(ZERO) == INF


@pytest.mark.parametrize(
    "x, text",
    [(D(3), "3"), (ZERO, "inf"), (D(3, 1), "3+1e"), (D(INF, 2), "2e"), (EPS, "e"), (D(-1, Fraction(-1, 2)), "-1+-1/2e")],
)
def test_format_and_parse(x, text):
    assert format_dual(x) == text
    assert parse_dual(text) == x


@given(dual_values)
def test_format_parse_round_trip(x):
    assert parse_dual(format_dual(x)) == x


@given(dual_values, dual_values, dual_values)
def test_semiring_axioms(x, y, z):
    assert dual_add(x, y) == dual_add(y, x)
    assert dual_add(dual_add(x, y), z) == dual_add(x, dual_add(y, z))
    assert dual_mul(x, y) == dual_mul(y, x)
    assert dual_mul(dual_mul(x, y), z) == dual_mul(x, dual_mul(y, z))
    assert dual_mul(x, dual_add(y, z)) == dual_add(dual_mul(x, y), dual_mul(x, z))
    assert dual_add(x, ZERO) == x and dual_mul(x, ONE) == x and dual_mul(x, ZERO) == ZERO


@given(dual_values, dual_values)
def test_pi_is_a_homomorphism(x, y):
    assert pi(dual_add(x, y)) == trop_add(pi(x), pi(y))
    assert pi(dual_mul(x, y)) == trop_mul(pi(x), pi(y))


@given(trop_values, trop_values)
def test_tropical_numbers_embed(a, b):
    assert dual_add(D(a), D(b)) == D(trop_add(a, b))
    assert dual_mul(D(a), D(b)) == D(trop_mul(a, b))


@given(dual_values)
def test_units_are_the_one_sided_elements(x):
    inv = dual_inverse(x)
    assert (inv is not None) == ((x.a == INF) != (x.b == INF))
