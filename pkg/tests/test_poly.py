from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from tropdual.arith import INF, DualValue, dual_add, dual_mul, pi
from tropdual.parse import parse_poly
from tropdual.poly import DualPolynomial, SimpleTerm, poly_add, poly_eval, poly_mul, poly_pi, simple_terms

from strategies import points, polynomials


def D(a, b=INF):
    return DualValue(a, b)


def expand(f: DualPolynomial, g: DualPolynomial) -> dict:
    """Distribute every pair of terms and merge by hand."""
    out: dict = {}
    for (n, c), (m, d) in product(f.terms.items(), g.terms.items()):
        e = tuple(i + j for i, j in zip(n, m))
        v = dual_mul(c, d)
        out[e] = dual_add(out.get(e, D(INF)), v)
    return {e: v for e, v in out.items() if not v.is_zero}


def test_simple_terms_of_a_dual_quadratic():
    f = parse_poly("(3+1e)*x^2 + (1+1e)*x + 2e")
    assert sorted((t.exponent, t.coeff, t.eps_degree) for t in simple_terms(f)) == sorted(
        [((2,), 3, 0), ((2,), 1, 1), ((1,), 1, 0), ((1,), 1, 1), ((0,), 2, 1)]
    )
    assert poly_eval(f, (0,)) == D(1, 1)


def test_box_generator_expansion():
    f = parse_poly("(x + e*x + 0)*(x + 1 + 1e)")
    a, b = parse_poly("x + e*x + 0"), parse_poly("x + 1 + 1e")
    assert dict(f.terms) == expand(a, b)
    assert dict(f.terms) == {(2,): D(0, 0), (1,): D(0, 1), (0,): D(1, 1)}


def test_merging_keeps_eps_copy_distinct():
    f = parse_poly("x + e*x + x")
    assert f == parse_poly("x + e*x")
    assert len(simple_terms(f)) == 2


def test_zero_coefficients_are_dropped():
    f = DualPolynomial(1, [((1,), D(INF)), ((0,), D(2))])
    assert dict(f.terms) == {(0,): D(2)}
    assert DualPolynomial.zero(2) == parse_poly("inf", k=2)


def test_monomial_at_infinity():
    f = parse_poly("x1 + 3", k=2)
    assert poly_eval(f, (INF, 0)) == D(3)
    # x2^0 stays 0 even when x2 is infinite
    assert poly_eval(parse_poly("x1 + 3", k=2), (1, INF)) == D(1)


def test_pi_of_polynomial():
    f = parse_poly("(3+1e)*x^2 + 2e")
    assert poly_pi(f) == parse_poly("1*x^2 + 2")


def test_mismatched_variable_counts():
    with pytest.raises(ValueError):
        poly_add(DualPolynomial.one(1), DualPolynomial.one(2))


@given(polynomials(2), polynomials(2))
def test_product_matches_expansion(f, g):
    assert dict(poly_mul(f, g).terms) == expand(f, g)


@given(polynomials(2), polynomials(2), points(2))
def test_evaluation_is_a_homomorphism(f, g, a):
    assert poly_eval(poly_add(f, g), a) == dual_add(poly_eval(f, a), poly_eval(g, a))
    assert poly_eval(poly_mul(f, g), a) == dual_mul(poly_eval(f, a), poly_eval(g, a))


@given(polynomials(2), points(2))
def test_pi_of_value_is_min_over_simple_terms(f, a):
    values = [t.value(a) for t in simple_terms(f)]
    assert pi(poly_eval(f, a)) == min(values, default=INF)


@given(polynomials(1), polynomials(1), polynomials(1))
def test_polynomial_semiring_laws(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f + g == g + f


@given(polynomials(2), st.integers(0, 3))
def test_power(f, e):
    p = DualPolynomial.one(2)
    for _ in range(e):
        p = p * f
    assert f**e == p
