from fractions import Fraction

import pytest
from hypothesis import given

from tropdual.arith import INF
from tropdual.bend import bend_region, classical_variety_region, in_bend_locus, in_variety, variety_region
from tropdual.grid import Grid, mask_and, mask_equal
from tropdual.parse import parse_poly, parse_polys
from tropdual.poly import DualPolynomial, poly_mul
from tropdual.polyhedra import LinearConstraint, Polyhedron
from tropdual.region import Region, contains, region_equal, region_union

from strategies import points, polynomials

DUAL_QUADRATIC = "(3+1e)*x^2 + (1+1e)*x + 2e"


def H(coeffs, rhs, rel="le"):
    return LinearConstraint(coeffs, rhs, rel)


@pytest.mark.parametrize("a, expected", [(Fraction(1, 2), True), (2, False), (-1, False), (0, True), (1, True)])
def test_dual_quadratic_membership(a, expected):
    assert in_bend_locus(parse_poly(DUAL_QUADRATIC), (a,)) is expected


def test_eps_copy_ties_with_itself():
    f = parse_poly("1 + x + e*x")
    assert in_bend_locus(f, (1,)) and in_bend_locus(f, (-3,))
    assert not in_bend_locus(f, (2,)) and not in_bend_locus(f, (INF,))


def test_segment_membership():
    f = parse_poly("x1^2 + x1*x2 + x1 + 1")
    assert in_bend_locus(f, (Fraction(1, 2), 0))
    assert not in_bend_locus(f, (2, 0))
    assert in_variety(parse_polys("x1^2 + x1*x2 + x1 + 1, x2 + 0"), (Fraction(1, 2), 0))


def test_degenerate_generators():
    assert in_variety([], (3,))
    one = DualPolynomial.one(1)
    assert not any(in_bend_locus(one, (a,)) for a in (-1, 0, 5, INF))
    assert bend_region(one).is_empty
    assert variety_region([], 2) == Region.whole(2)


def test_monomials_and_zero_vanish_only_at_infinity():
    x = parse_poly("x")
    assert not in_bend_locus(x, (0,)) and in_bend_locus(x, (INF,))
    assert region_equal(bend_region(x), Region(1, {(0,): [Polyhedron.whole(0)]}))
    assert bend_region(DualPolynomial.zero(2)) == Region.whole(2)


def test_whole_line_from_eps_copy():
    assert region_equal(variety_region([parse_poly("x + e*x")]), Region.whole(1))


def test_half_line_example():
    f = parse_poly("x + e*x + 3")
    assert region_equal(bend_region(f), Region.finite(1, [Polyhedron(1, [H((1,), 3)])]))


def test_box_generator_with_point_at_infinity():
    f = parse_poly("(x + e*x + -1)*(x + 2 + 2e)")
    r = bend_region(f)
    target = Region(1, {(): [Polyhedron(1, [H((1,), -1)]), Polyhedron(1, [H((-1,), -2)])], (0,): [Polyhedron.whole(0)]})
    assert region_equal(r, target)


GOLDEN = [
    DUAL_QUADRATIC,
    "1 + x + e*x",
    "(x + e*x + 0)*(x + 1 + 1e)",
    "x1^2 + x1*x2 + x1 + 1",
    "x1*x2 + (0+0e)*x1 + (0+0e)*x2 + 1",
    "x1*x2 + x1 + x2 + 1",
    "x1 + x2 + 0",
    "(2+1e)*x1^2*x2 + 3e*x2^2 + x1 + (0+1/2e)",
    "x1^3 + 1*x1*x2 + x2^2 + e",
    "x1",
    "3e*x2",
]


@pytest.mark.parametrize("text", GOLDEN)
def test_region_matches_definition_on_grid(text):
    f = parse_poly(text)
    g = Grid(f.k, step=Fraction(1, 8) if f.k == 1 else Fraction(1, 4))
    a, b = g.region_mask(bend_region(f)), g.bend_mask(f)
    assert mask_equal(a, b), g.first_difference(a, b)


@given(polynomials(2), points(2))
def test_region_membership_equals_pointwise(f, a):
    assert contains(bend_region(f), a) == in_bend_locus(f, a)


@given(polynomials(1), polynomials(1))
def test_product_is_union(f, g):
    assert region_equal(bend_region(poly_mul(f, g)), region_union(bend_region(f), bend_region(g)))


@given(polynomials(2, max_terms=3), polynomials(2, max_terms=3), points(2))
def test_product_is_union_pointwise(f, g, a):
    assert in_bend_locus(poly_mul(f, g), a) == (in_bend_locus(f, a) or in_bend_locus(g, a))


@given(polynomials(2, classical=True), polynomials(2, classical=True))
def test_classical_generators_agree_with_prevariety(f, g):
    assert region_equal(variety_region([f, g]), classical_variety_region([f, g]))


def test_variety_matches_grid_for_pairs():
    gens = parse_polys("x1^2 + x1*x2 + x1 + 1, x2 + 0")
    g = Grid(2, step=Fraction(1, 4))
    a = g.region_mask(variety_region(gens))
    b = mask_and(*[g.bend_mask(f) for f in gens])
    assert mask_equal(a, b)
