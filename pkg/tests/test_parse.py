import pytest
from hypothesis import given

from tropdual.arith import INF, DualValue
from tropdual.parse import (
    ParseError,
    format_pair,
    format_poly,
    infer_variables,
    parse_congruence,
    parse_point,
    parse_poly,
    parse_polys,
    variable_names,
)
from tropdual.poly import DualPolynomial

from strategies import polynomials


def test_grammar_forms_agree():
    a = parse_poly("(3+1e)*x^2 + (1+1e)*x + 2e")
    b = parse_poly("(3+1e)x^2+(1+1e)x+2e")
    c = parse_poly("  (3 + 1e) * x ^ 2 + (1 + 1e) * x + 2 e ")
    assert a == b == c
    assert a.terms[(0,)] == DualValue(INF, 2)


def test_indexed_variables():
    f = parse_poly("x1*x2 + (0+0e)*x1 + (0+0e)*x2 + 1")
    assert f.k == 2
    assert f.terms[(1, 1)] == DualValue(0)
    assert f.terms[(1, 0)] == DualValue(0, 0)


def test_products_and_powers_expand():
    assert parse_poly("(x + 1)^2") == parse_poly("x^2 + 1*x + 2")
    assert parse_poly("x1 x2^2") == DualPolynomial.monomial(2, (1, 2))


def test_variable_inference():
    assert infer_variables(["x + 1"]) == ["x"]
    assert infer_variables(["x3 + 0"]) == ["x1", "x2", "x3"]
    assert infer_variables(["x^2 + x*y"]) == ["x", "y"]
    assert infer_variables(["0"]) == ["x"]
    with pytest.raises(ValueError):
        infer_variables(["x + x1"])
    assert variable_names(3, embedded=True) == ["x1", "x2", "y"]
    assert variable_names(2, embedded=True) == ["x", "y"]


@pytest.mark.parametrize("text", ["x +", "x ^ y", "(x + 1", "x $ 1", "x2 + z"])
def test_parse_errors_carry_position(text):
    with pytest.raises(ParseError) as info:
        parse_poly(text, names=["x", "x2"] if "x2" in text else None)
    assert info.value.pos >= 0
    assert "<HERE>" in str(info.value)


def test_generator_lists_and_congruences():
    gens = parse_polys("x1 + y + 0, x2 + y + 0; y + 0")
    assert len(gens) == 3 and all(g.k == 3 for g in gens)
    pairs = parse_congruence("x^2 + x + 1 ~ x; x ~ x")
    assert len(pairs) == 2
    assert format_pair(pairs[0]) == "x^2 + x + 1 ~ x"
    with pytest.raises(ParseError):
        parse_congruence("x ~ 1 ~ 2")


def test_congruences_must_be_classical():
    with pytest.raises(ValueError):
        parse_congruence("x + e ~ 0")


def test_points():
    assert parse_point("1/2, inf") == (parse_point("1/2")[0], INF)


def test_format_examples():
    assert format_poly(parse_poly("(x + e*x + 0)*(x + 1 + 1e)")) == "(0+0e)*x^2 + (0+1e)*x + (1+1e)"
    assert format_poly(DualPolynomial.zero(1)) == "inf"
    assert format_poly(parse_poly("x1 + 0", k=2)) == "x1 + 0"


@given(polynomials(1))
def test_round_trip_one_variable(f):
    assert parse_poly(format_poly(f), k=1) == f


@given(polynomials(3, max_exp=3))
def test_round_trip_three_variables(f):
    assert parse_poly(format_poly(f), k=3) == f


def test_newlines_separate_relations():
    assert parse_congruence("x+0 ~ 0\nx^2+1 ~ 1") == parse_congruence("x+0 ~ 0; x^2+1 ~ 1")
