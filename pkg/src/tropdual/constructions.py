"""Translations between congruences, classical ideals, and ideals over dual numbers.

Congruence varieties are decomposed into convex pieces, each piece into
closed half-spaces ``c + m.a <= n.a``, and every half-space is realized
either by a classical ideal in one extra variable ``y`` (cut down to the
slice ``y = 0``) or by the single dual generator ``x^n + (c + c eps) x^m``.
Intersections become generator-list unions and unions become products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence, Union

from .arith import INF, DualValue, tv
from .bend import variety_region
from .congruence import CongruencePair, congruence_region
from .poly import DualPolynomial, poly_add, poly_mul
from .polyhedra import LinearConstraint, Polyhedron, simplify_pieces
from .region import Region, symmetric_witness


class UnrepresentableRegion(ValueError):
    """Region content the half-space pipeline cannot reproduce (e.g. isolated points at infinity)."""

    def __init__(self, msg: str, witness=None):
        super().__init__(msg)
        self.witness = witness


@dataclass(frozen=True)
class HalfspaceCongruence:
    """``x^n + c x^m ~ c x^m``, whose variety is ``{a : c + m.a <= n.a}``."""

    n: tuple
    m: tuple
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(e) for e in self.n))
        object.__setattr__(self, "m", tuple(int(e) for e in self.m))
        object.__setattr__(self, "c", tv(self.c))
        if len(self.n) != len(self.m):
            raise ValueError("exponent vectors of different lengths")
        if min(self.n + self.m, default=0) < 0:
            raise ValueError("exponents must be nonnegative")
        if self.n == self.m:
            raise ValueError("degenerate half-space: n == m")
        if self.c == INF:
            raise ValueError("half-space constant must be finite")

    @property
    def k(self) -> int:
        return len(self.n)

    def pair(self) -> CongruencePair:
        k = self.k
        xn = DualPolynomial.monomial(k, self.n)
        cxm = DualPolynomial.monomial(k, self.m, self.c)
        return CongruencePair(poly_add(xn, cxm), cxm)

    def constraint(self) -> LinearConstraint:
        """``(m - n).a <= -c``."""
        return LinearConstraint(tuple(mi - ni for mi, ni in zip(self.m, self.n)), -self.c, "le")

    def region(self) -> Region:
        return congruence_region([self.pair()])


@dataclass(frozen=True)
class Bounded:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo >= self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi})")

    def __contains__(self, x) -> bool:
        x = tv(x)
        return x != INF and self.lo < x < self.hi


@dataclass(frozen=True)
class RayToInfinity:
    lo: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))

    def __contains__(self, x) -> bool:
        return tv(x) > self.lo


Interval = Union[Bounded, RayToInfinity]


def box_contains(box: Sequence[Interval], point: Sequence) -> bool:
    return all(x in b for b, x in zip(box, point))


# -- classical ideals in k+1 variables --------------------------------------


def _y(k: int) -> DualPolynomial:
    return DualPolynomial.var(k + 1, k)


def _y_plus_zero(k: int) -> DualPolynomial:
    return poly_add(_y(k), DualPolynomial.one(k + 1))


def halfspace_congruence_to_ideal(h: HalfspaceCongruence) -> list[DualPolynomial]:
    """``[y (x^n + c x^m) + c x^m, y + 0]`` in ``k + 1`` variables."""
    k = h.k
    xn = DualPolynomial.monomial(k + 1, h.n + (0,))
    cxm = DualPolynomial.monomial(k + 1, h.m + (0,), h.c)
    f = poly_add(poly_mul(_y(k), poly_add(xn, cxm)), cxm)
    return [f, _y_plus_zero(k)]


def convex_to_ideal(hs: Sequence[HalfspaceCongruence], k: Optional[int] = None) -> list[DualPolynomial]:
    """Generators cutting out the intersection of the half-spaces on ``y = 0``.

    With ``k`` given, an empty list is accepted and means the whole slice.
    """
    hs = list(hs)
    if not hs:
        if k is None:
            raise ValueError("need at least one half-space")
        return [_y_plus_zero(k)]
    k = hs[0].k
    return [halfspace_congruence_to_ideal(h)[0] for h in hs] + [_y_plus_zero(k)]


def union_to_ideal(parts: Sequence[Sequence[DualPolynomial]], k: Optional[int] = None) -> list[DualPolynomial]:
    """Generators of the product ideal: one product per choice of a generator from each part."""
    parts = [list(p) for p in parts]
    if not parts:
        if k is None:
            raise ValueError("need at least one part")
        return [DualPolynomial.one(k)]
    out = []
    for choice in product(*parts):
        g = choice[0]
        for h in choice[1:]:
            g = poly_mul(g, h)
        if g not in out:
            out.append(g)
    return out


def horizontal_embed(region: Region) -> Region:
    """Image of ``region`` under ``a -> (a, 0)``."""
    strata = {}
    for s, polys in region.strata.items():
        dim = region.k - len(s)
        y_zero = LinearConstraint((0,) * dim + (1,), 0, "eq")
        strata[s] = [
            Polyhedron(dim + 1, [LinearConstraint(h.coeffs + (0,), h.rhs, h.rel) for h in p.constraints] + [y_zero])
            for p in polys
        ]
    return Region(region.k + 1, strata)


# -- region decomposition ---------------------------------------------------


def polyhedron_halfspaces(p: Polyhedron) -> list[HalfspaceCongruence]:
    """Split a closed polyhedron into half-space congruences ``c + m.a <= n.a``."""
    out = []
    for h in p.constraints:
        if h.strict:
            raise RuntimeError(f"strict constraint {h} reached the half-space pipeline")
        sides = [(h.coeffs, h.rhs)]
        if h.rel == "eq":
            sides.append((tuple(-c for c in h.coeffs), -h.rhs))
        for beta, r in sides:
            # coefficients are already primitive integers after normalization
            m = tuple(max(int(b), 0) for b in beta)
            n = tuple(max(-int(b), 0) for b in beta)
            out.append(HalfspaceCongruence(n, m, -r))
    return out


def _finite_pieces(region: Region) -> list[Polyhedron]:
    return simplify_pieces(region.pieces(()))


def _check_same(expected: Region, got: Region) -> None:
    w = symmetric_witness(expected, got)
    if w is None:
        return
    if all(x != INF for x in w):
        raise RuntimeError(f"finite stratum mismatch at {w}")
    raise UnrepresentableRegion(
        f"infinity strata differ at {tuple('inf' if x == INF else str(x) for x in w)}", witness=w
    )


def region_to_ideal(region: Region, check: bool = True) -> list[DualPolynomial]:
    """Classical generators in ``k + 1`` variables with ``V(I) = i(region)``."""
    k = region.k
    parts = [convex_to_ideal(polyhedron_halfspaces(p), k) for p in _finite_pieces(region)]
    gens = union_to_ideal(parts, k + 1)
    if check:
        _check_same(horizontal_embed(region), variety_region(gens, k + 1))
    return gens


def as_halfspace(p: CongruencePair) -> Optional[HalfspaceCongruence]:
    """Read ``x^n + c x^m ~ c x^m`` (either orientation) off a relation, if it has that shape."""
    for lhs, rhs in ((p.lhs, p.rhs), (p.rhs, p.lhs)):
        if len(rhs) != 1 or len(lhs) != 2:
            continue
        (m, cm), = rhs.terms.items()
        if lhs.terms.get(m) != cm:
            continue
        (n, cn), = ((e, c) for e, c in lhs.terms.items() if e != m)
        if cn == DualValue(0, INF):
            return HalfspaceCongruence(n, m, cm.a)
    return None


def _halfspaces(pairs: Sequence[CongruencePair]) -> Optional[list[HalfspaceCongruence]]:
    hs = [as_halfspace(p) for p in pairs]
    return hs if hs and all(h is not None for h in hs) else None


def congruence_to_ideal(pairs: Sequence[CongruencePair], check: bool = True) -> list[DualPolynomial]:
    """Classical generators in ``k + 1`` variables with ``V(I) = i(V(E))``.

    Relations already of half-space shape are used as they are; anything else
    goes through the region decomposition.
    """
    pairs = list(pairs)
    hs = _halfspaces(pairs)
    if hs is None:
        return region_to_ideal(congruence_region(pairs), check)
    gens = convex_to_ideal(hs)
    if check:
        _check_same(horizontal_embed(congruence_region(pairs)), variety_region(gens))
    return gens


def naive_congruence_ideal(pairs: Sequence[CongruencePair]) -> list[DualPolynomial]:
    """``<lhs + y rhs, y + 0>``: applies the half-space recipe to relations not of that shape.

    Its variety usually differs from the embedded congruence variety.
    """
    pairs = list(pairs)
    k = pairs[0].k
    gens = [poly_add(p.lhs.extend(), poly_mul(_y(k), p.rhs.extend())) for p in pairs]
    return gens + [_y_plus_zero(k)]


# -- ideals over dual numbers -----------------------------------------------


def halfspace_dual_generator(h: HalfspaceCongruence) -> DualPolynomial:
    """``x^n + (c + c eps) x^m``."""
    k = h.k
    return poly_add(DualPolynomial.monomial(k, h.n), DualPolynomial.monomial(k, h.m, DualValue(h.c, h.c)))


def whole_space_generator(k: int) -> DualPolynomial:
    """``(0 + 0 eps) x_1``, whose bend locus is all of T^k."""
    return DualPolynomial.monomial(k, (1,) + (0,) * (k - 1), DualValue(0, 0))


def region_to_dual_ideal(region: Region, check: bool = True) -> list[DualPolynomial]:
    k = region.k
    parts = []
    for p in _finite_pieces(region):
        gens = [halfspace_dual_generator(h) for h in polyhedron_halfspaces(p)]
        parts.append(gens or [whole_space_generator(k)])
    gens = union_to_ideal(parts, k)
    if check:
        _check_same(region, variety_region(gens, k))
    return gens


def congruence_to_dual_ideal(pairs: Sequence[CongruencePair], check: bool = True) -> list[DualPolynomial]:
    """Dual generators whose variety equals the congruence variety."""
    pairs = list(pairs)
    hs = _halfspaces(pairs)
    if hs is None:
        return region_to_dual_ideal(congruence_region(pairs), check)
    # the original exponents keep the behaviour on the infinity strata, which
    # the normalized constraints of the region would lose
    gens = [halfspace_dual_generator(h) for h in hs]
    if check:
        _check_same(congruence_region(pairs), variety_region(gens))
    return gens


def dual_ideal_to_classical(gens: Sequence[DualPolynomial], k: Optional[int] = None, check: bool = True):
    """Classical generators in ``k + 1`` variables with ``V(I) = i(V(gens))``."""
    return region_to_ideal(variety_region(gens, k), check)


def box_complement_ideal(box: Sequence[Interval]) -> list[DualPolynomial]:
    """One dual polynomial per coordinate; their bend loci union to the complement of ``box``."""
    k = len(box)
    out = []
    for i, b in enumerate(box):
        x_eps = DualPolynomial.monomial(k, [int(j == i) for j in range(k)], DualValue(0, 0))
        if isinstance(b, Bounded):
            low = poly_add(x_eps, DualPolynomial.constant(k, b.lo))
            high = poly_add(DualPolynomial.var(k, i), DualPolynomial.constant(k, DualValue(b.hi, b.hi)))
            out.append(poly_mul(low, high))
        elif isinstance(b, RayToInfinity):
            out.append(poly_add(x_eps, DualPolynomial.constant(k, b.lo)))
        else:
            raise TypeError(f"not an interval: {b!r}")
    return out


def box_complement_region(box: Sequence[Interval]) -> Region:
    """Exact region of ``T^k`` minus the open box."""
    from .region import all_strata, free_coords

    k = len(box)
    strata: dict = {}
    for s in all_strata(k):
        free = free_coords(k, s)
        dim = len(free)
        polys = []
        for i, b in enumerate(box):
            if i in s:
                # the point at infinity lies outside every bounded interval
                if isinstance(b, Bounded):
                    polys.append(Polyhedron.whole(dim))
                continue
            j = free.index(i)
            unit = tuple(int(t == j) for t in range(dim))
            neg = tuple(-u for u in unit)
            polys.append(Polyhedron(dim, [LinearConstraint(unit, b.lo, "le")]))
            if isinstance(b, Bounded):
                polys.append(Polyhedron(dim, [LinearConstraint(neg, -b.hi, "le")]))
        strata[s] = polys
    return Region(k, strata)
