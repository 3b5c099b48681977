from fractions import Fraction

import pytest
from hypothesis import given

from tropdual.arith import INF
from tropdual.congruence import (
    CongruencePair,
    congruence_region,
    pair_product,
    pair_sum,
    satisfies,
    satisfies_all,
    twisted_product,
)
from tropdual.grid import Grid, mask_equal
from tropdual.parse import parse_congruence, parse_poly
from tropdual.polyhedra import LinearConstraint, Polyhedron
from tropdual.region import Region, contains, region_equal

from strategies import points, polynomials


def H(coeffs, rhs, rel="le"):
    return LinearConstraint(coeffs, rhs, rel)


def test_pointwise_examples():
    (p,) = parse_congruence("x^2 + x + 1 ~ x")
    assert satisfies(p, (Fraction(1, 2),)) and not satisfies(p, (2,))
    (q,) = parse_congruence("x1 + x2 + 0 ~ 0")
    assert satisfies(q, (1, 2)) and not satisfies(q, (-1, -2))


def test_quadratic_relation_region():
    r = congruence_region(parse_congruence("x^2 + x + 1 ~ x"))
    assert r == Region.finite(1, [Polyhedron(1, [H((-1,), 0), H((1,), 1)])])


def test_quadrant_relation_strata():
    r = congruence_region(parse_congruence("x1 + x2 + 0 ~ 0"))
    target = Region(
        2,
        {
            (): [Polyhedron(2, [H((-1, 0), 0), H((0, -1), 0)])],
            (0,): [Polyhedron(1, [H((-1,), 0)])],
            (1,): [Polyhedron(1, [H((-1,), 0)])],
            (0, 1): [Polyhedron.whole(0)],
        },
    )
    assert region_equal(r, target)
    g = Grid(2, step=Fraction(1, 4))
    assert mask_equal(g.region_mask(r), g.congruence_mask(parse_congruence("x1 + x2 + 0 ~ 0")[0]))


def test_reflexive_relation_is_everything():
    f = parse_poly("x1^2 + 3*x2 + 1")
    assert region_equal(congruence_region([CongruencePair(f, f)]), Region.whole(2))


def test_both_sides_infinite():
    r = congruence_region(parse_congruence("x ~ 2*x"))
    assert region_equal(r, Region(1, {(0,): [Polyhedron.whole(0)]}))


def test_sides_must_be_classical_and_compatible():
    with pytest.raises(ValueError):
        CongruencePair(parse_poly("x + e"), parse_poly("x"))
    with pytest.raises(ValueError):
        CongruencePair(parse_poly("x"), parse_poly("x1 + x2"))


def test_twisted_product_formula():
    p = CongruencePair(parse_poly("x + 1"), parse_poly("2"))
    q = CongruencePair(parse_poly("x"), parse_poly("0"))
    t = twisted_product(p, q)
    assert t.lhs == parse_poly("x^2 + 1*x + 2")
    assert t.rhs == parse_poly("x + 1 + 2*x")


@given(polynomials(2, 3, classical=True), polynomials(2, 3, classical=True), points(2))
def test_region_matches_pointwise(f, g, a):
    p = CongruencePair(f, g)
    assert contains(congruence_region([p]), a) == satisfies(p, a)


@given(
    polynomials(1, 3, classical=True),
    polynomials(1, 3, classical=True),
    polynomials(1, 3, classical=True),
    polynomials(1, 3, classical=True),
    points(1),
)
def test_closure_properties(f, g, f2, g2, a):
    p, q = CongruencePair(f, g), CongruencePair(f2, g2)
    assert satisfies(CongruencePair(g, f), a) == satisfies(p, a)
    if satisfies(p, a):
        assert satisfies(twisted_product(p, q), a)
        if satisfies(q, a):
            assert satisfies(pair_sum(p, q), a) and satisfies(pair_product(p, q), a)
    if satisfies(p, a) and satisfies(CongruencePair(g, g2), a):
        assert satisfies(CongruencePair(f, g2), a)


@given(polynomials(2, 3, classical=True), polynomials(2, 3, classical=True), points(2))
def test_list_is_an_intersection(f, g, a):
    pairs = [CongruencePair(f, g), CongruencePair(g, f + g)]
    assert contains(congruence_region(pairs), a) == satisfies_all(pairs, a)
