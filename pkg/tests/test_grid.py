from fractions import Fraction

from hypothesis import given, settings

from tropdual.arith import INF
from tropdual.bend import bend_region, in_bend_locus
from tropdual.congruence import CongruencePair, satisfies
from tropdual.constructions import Bounded, RayToInfinity, box_contains
from tropdual.grid import Grid, box_mask, mask_not
from tropdual.parse import parse_poly

from strategies import polynomials

SMALL = Grid(2, step=Fraction(1, 2), lo=-2, hi=2, inf_step=1)


def test_grid_layout():
    g = Grid(1, step=Fraction(1, 8))
    assert g.size == 81 + 1
    pts = list(g.points())
    assert pts[0] == (Fraction(-5),) and pts[80] == (Fraction(5),) and pts[-1] == (INF,)
    assert SMALL.size == 81 + 5 + 5 + 1


def _pointwise(grid, pred):
    out, pts = [], iter(grid.points())
    for st in grid.strata:
        out.append([pred(next(pts)) for _ in range(len(st.nums))])
    return out


@settings(max_examples=60)
@given(polynomials(2, max_exp=3))
def test_bend_mask_equals_pointwise(f):
    mask = SMALL.bend_mask(f)
    assert [m.tolist() for m in mask] == _pointwise(SMALL, lambda a: in_bend_locus(f, a))


@settings(max_examples=60)
@given(polynomials(2, classical=True), polynomials(2, classical=True))
def test_congruence_mask_equals_pointwise(f, g):
    p = CongruencePair(f, g)
    assert [m.tolist() for m in SMALL.congruence_mask(p)] == _pointwise(SMALL, lambda a: satisfies(p, a))


@settings(max_examples=60)
@given(polynomials(2, max_exp=3))
def test_region_mask_equals_pointwise(f):
    r = bend_region(f)
    assert [m.tolist() for m in SMALL.region_mask(r)] == _pointwise(SMALL, lambda a: a in r)


def test_large_coefficients_fall_back_to_exact_objects():
    f = parse_poly(f"{2**61}*x1^3 + {-(2**61)}*x2 + 0", k=2)
    assert [m.tolist() for m in SMALL.bend_mask(f)] == _pointwise(SMALL, lambda a: in_bend_locus(f, a))


def test_box_mask_and_difference():
    box = [Bounded(0, 1), RayToInfinity(Fraction(1, 2))]
    m = box_mask(SMALL, box)
    assert [x.tolist() for x in m] == _pointwise(SMALL, lambda a: box_contains(box, a))
    assert SMALL.first_difference(m, m) is None
    assert SMALL.first_difference(m, mask_not(m)) == next(iter(SMALL.points()))
