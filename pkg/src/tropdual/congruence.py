"""Finitely generated congruences on classical tropical polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .arith import pi
from .bend import restrict_terms, tie_cells
from .poly import DualPolynomial, poly_add, poly_eval, poly_mul, simple_terms
from .polyhedra import Polyhedron
from .region import Region, all_strata, region_intersect_all, simplify_region


@dataclass(frozen=True)
class CongruencePair:
    """The relation ``lhs ~ rhs`` between classical polynomials."""

    lhs: DualPolynomial
    rhs: DualPolynomial

    def __post_init__(self):
        if self.lhs.k != self.rhs.k:
            raise ValueError("both sides of a relation need the same variable count")
        if not (self.lhs.is_classical and self.rhs.is_classical):
            raise ValueError("congruence relations are between classical polynomials")

    @property
    def k(self) -> int:
        return self.lhs.k

    def __str__(self) -> str:
        return f"{self.lhs} ~ {self.rhs}"


def satisfies(p: CongruencePair, point: Sequence) -> bool:
    return pi(poly_eval(p.lhs, point)) == pi(poly_eval(p.rhs, point))


def satisfies_all(pairs: Sequence[CongruencePair], point: Sequence) -> bool:
    return all(satisfies(p, point) for p in pairs)


def twisted_product(p: CongruencePair, q: CongruencePair) -> CongruencePair:
    """``(f, g) x (f', g') = (ff' + gg', fg' + gf')``."""
    f, g, f2, g2 = p.lhs, p.rhs, q.lhs, q.rhs
    return CongruencePair(
        poly_add(poly_mul(f, f2), poly_mul(g, g2)),
        poly_add(poly_mul(f, g2), poly_mul(g, f2)),
    )


def pair_sum(p: CongruencePair, q: CongruencePair) -> CongruencePair:
    return CongruencePair(poly_add(p.lhs, q.lhs), poly_add(p.rhs, q.rhs))


def pair_product(p: CongruencePair, q: CongruencePair) -> CongruencePair:
    return CongruencePair(poly_mul(p.lhs, q.lhs), poly_mul(p.rhs, q.rhs))


def pair_region(p: CongruencePair) -> Region:
    """Region of ``{a : lhs(a) = rhs(a)}``."""
    k = p.k
    left = [(t.exponent, t.coeff) for t in simple_terms(p.lhs)]
    right = [(t.exponent, t.coeff) for t in simple_terms(p.rhs)]
    strata = {}
    for s in all_strata(k):
        dim = k - len(s)
        lf = restrict_terms(left, k, s)
        rg = restrict_terms(right, k, s)
        if not lf and not rg:
            strata[s] = [Polyhedron.whole(dim)]
        elif lf and rg:
            strata[s] = tie_cells(product(lf, rg), lf + rg, dim)
    return simplify_region(Region(k, strata))


def congruence_region(pairs: Sequence[CongruencePair], k: Optional[int] = None) -> Region:
    """Region of ``V(E)`` for ``E`` generated by ``pairs``."""
    pairs = list(pairs)
    if k is None:
        if not pairs:
            raise ValueError("variable count needed for an empty relation list")
        k = pairs[0].k
    if any(p.k != k for p in pairs):
        raise ValueError("relations have different variable counts")
    return simplify_region(region_intersect_all(k, (pair_region(p) for p in pairs)))
