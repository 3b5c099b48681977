"""Bend loci of polynomials over the tropical dual numbers.

A point ``a`` of T^k lies in ``V(f)`` when the minimum of ``c + n.a`` over the
simple terms ``c x^n eps^d`` of ``f`` is attained by at least two of them, or
when that minimum is INF (``f(a)`` is the zero element). The second clause
only matters for monomials and the zero polynomial: with two or more terms an
INF minimum is attained twice anyway. It is what makes ``V(fg) = V(f) ∪ V(g)``
hold on the infinity strata.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .arith import INF, tv
from .poly import DualPolynomial, monomial_value, simple_terms
from .polyhedra import LinearConstraint, Polyhedron
from .region import Region, all_strata, free_coords, region_intersect_all, simplify_region


def in_bend_locus(f: DualPolynomial, point: Sequence) -> bool:
    point = [tv(x) for x in point]
    if len(point) != f.k:
        raise ValueError(f"point has {len(point)} coordinates, expected {f.k}")
    values = [t.value(point) for t in simple_terms(f)]
    low = min(values, default=INF)
    return low == INF or sum(1 for v in values if v == low) >= 2


def in_variety(gens: Sequence[DualPolynomial], point: Sequence) -> bool:
    return all(in_bend_locus(f, point) for f in gens)


def restrict_terms(terms, k: int, stratum) -> list[tuple[tuple, Fraction]]:
    """``(exponent on free coords, coeff)`` for the terms that stay finite on ``stratum``."""
    free = free_coords(k, stratum)
    out = []
    for n, c in terms:
        if any(n[i] for i in stratum):
            continue
        out.append((tuple(n[i] for i in free), c))
    return out


def tie_cells(pairs, candidates, dim: int) -> list[Polyhedron]:
    """Cells where terms ``s`` and ``t`` agree and are minimal among ``candidates``.

    ``pairs`` iterates over ``(s, t)`` with each term given as ``(n, c)``; a
    term's value is ``c + n.a``.
    """
    cells = []
    for (ns, cs), (nt, ct) in pairs:
        cons = [LinearConstraint(tuple(p - q for p, q in zip(ns, nt)), ct - cs, "eq")]
        for nu, cu in candidates:
            cons.append(LinearConstraint(tuple(p - q for p, q in zip(ns, nu)), cu - cs, "le"))
        cells.append(Polyhedron(dim, cons))
    return cells


def bend_region(f: DualPolynomial) -> Region:
    """Exact region of ``V(f)``."""
    k = f.k
    terms = [(t.exponent, t.coeff) for t in simple_terms(f)]
    strata = {}
    for s in all_strata(k):
        dim = k - len(s)
        live = restrict_terms(terms, k, s)
        if not live:
            strata[s] = [Polyhedron.whole(dim)]
        elif len(live) >= 2:
            strata[s] = tie_cells(combinations(live, 2), live, dim)
    return simplify_region(Region(k, strata))


def variety_region(gens: Sequence[DualPolynomial], k: Optional[int] = None) -> Region:
    """Region of the variety of the ideal generated by ``gens``."""
    gens = list(gens)
    if k is None:
        if not gens:
            raise ValueError("variable count needed for an empty generator list")
        k = gens[0].k
    if any(g.k != k for g in gens):
        raise ValueError("generators have different variable counts")
    return simplify_region(region_intersect_all(k, (bend_region(g) for g in gens)))


def classical_variety_region(gens: Sequence[DualPolynomial], k: Optional[int] = None) -> Region:
    """Tropical prevariety of classical polynomials, built from monomials directly.

    Used as an independent check against :func:`variety_region`.
    """
    gens = list(gens)
    k = gens[0].k if k is None else k
    out = Region.whole(k)
    for g in gens:
        if not g.is_classical:
            raise ValueError("classical_variety_region needs classical polynomials")
        strata = {}
        monos = list(g.terms.items())
        for s in all_strata(k):
            free = free_coords(k, s)
            live = [(n, c.a) for n, c in monos if all(n[i] == 0 for i in s)]
            dim = len(free)
            if not live:
                strata[s] = [Polyhedron.whole(dim)]
                continue
            cells = []
            for i, (n, c) in enumerate(live):
                for m, d in live[i + 1:]:
                    cons = [LinearConstraint([n[j] - m[j] for j in free], d - c, "eq")]
                    cons += [LinearConstraint([n[j] - p[j] for j in free], e - c, "le") for p, e in live]
                    cells.append(Polyhedron(dim, cons))
            strata[s] = cells
        out = _intersect(out, Region(k, strata))
    return out


def _intersect(a: Region, b: Region) -> Region:
    return Region(a.k, {s: [p & q for p in a.strata[s] for q in b.strata[s]] for s in set(a.strata) & set(b.strata)})


def bend_value(f: DualPolynomial, point: Sequence):
    """The minimum over simple terms at ``point`` (equals pi of the value)."""
    point = [tv(x) for x in point]
    return min((monomial_value(t.exponent, t.coeff, point) for t in simple_terms(f)), default=INF)
