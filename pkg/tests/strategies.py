"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from tropdual.arith import INF, DualValue
from tropdual.poly import DualPolynomial

rationals = st.builds(Fraction, st.integers(-12, 12), st.sampled_from([1, 2, 3, 4]))
trop_values = st.one_of(rationals, st.just(INF))
dual_values = st.builds(DualValue, trop_values, trop_values)


def points(k: int, allow_inf: bool = True):
    coord = trop_values if allow_inf else rationals
    return st.tuples(*[coord] * k)


@st.composite
def polynomials(draw, k: int, max_terms: int = 4, max_exp: int = 2, classical: bool = False):
    n_terms = draw(st.integers(0, max_terms))
    terms = []
    for _ in range(n_terms):
        n = tuple(draw(st.integers(0, max_exp)) for _ in range(k))
        if classical:
            c = DualValue(draw(rationals), INF)
        else:
            c = draw(dual_values)
        terms.append((n, c))
    return DualPolynomial(k, terms)
