"""Randomized property suites, each cross-checked against a grid oracle.

Every suite is deterministic for a given seed and returns a :class:`Report`.
A failure records the offending instance and, where possible, a witness
point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .arith import INF, DualValue, dual_add, dual_inverse, dual_mul, ONE, ZERO, EPS, pi, trop_add, trop_mul
from .bend import bend_region, classical_variety_region, in_bend_locus, variety_region
from .congruence import (
    CongruencePair,
    congruence_region,
    pair_product,
    pair_sum,
    satisfies,
    twisted_product,
)
from .constructions import (
    Bounded,
    HalfspaceCongruence,
    RayToInfinity,
    box_complement_ideal,
    congruence_to_dual_ideal,
    halfspace_congruence_to_ideal,
    horizontal_embed,
)
from .grid import Grid, box_mask, mask_and, mask_equal, mask_not, mask_or
from .parse import format_poly, parse_congruence
from .poly import DualPolynomial, poly_add, poly_mul
from .region import region_union, region_union_all, symmetric_witness, difference_witness


@dataclass
class Report:
    name: str
    cases: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, what: str, witness=None) -> None:
        self.failures.append((what, witness))

    def summary(self) -> str:
        status = "pass" if self.ok else f"FAIL ({len(self.failures)} counterexamples)"
        return f"{self.name}: {status}; {self.cases} instances, {self.checks} checks"


# -- random data ------------------------------------------------------------


def random_rational(rng: random.Random, lo=-3, hi=3, denom: int = 2) -> Fraction:
    return Fraction(rng.randint(lo * denom, hi * denom), denom)


def random_trop(rng: random.Random, p_inf: float = 0.15, **kw):
    return INF if rng.random() < p_inf else random_rational(rng, **kw)


def random_dual(rng: random.Random, p_eps: float = 0.5) -> DualValue:
    a = random_rational(rng)
    if rng.random() >= p_eps:
        return DualValue(a, INF)
    b = random_rational(rng)
    r = rng.random()
    if r < 0.2:
        return DualValue(INF, b)
    return DualValue(a, b)


def random_poly(
    rng: random.Random, k: int, max_terms: int = 4, max_exp: int = 2, dual: bool = True, min_terms: int = 1
) -> DualPolynomial:
    terms = []
    for _ in range(rng.randint(min_terms, max_terms)):
        n = tuple(rng.randint(0, max_exp) for _ in range(k))
        c = random_dual(rng) if dual else DualValue(random_rational(rng), INF)
        terms.append((n, c))
    return DualPolynomial(k, terms)


def random_point(rng: random.Random, k: int, p_inf: float = 0.15) -> tuple:
    return tuple(random_trop(rng, p_inf=p_inf, lo=-4, hi=4, denom=4) for _ in range(k))


def random_halfspace(rng: random.Random, k: int, max_exp: int = 3) -> HalfspaceCongruence:
    while True:
        n = tuple(rng.randint(0, max_exp) for _ in range(k))
        m = tuple(rng.randint(0, max_exp) for _ in range(k))
        if n != m:
            return HalfspaceCongruence(n, m, random_rational(rng, -3, 3, 2))


def random_box(rng: random.Random, k: int) -> list:
    box = []
    for _ in range(k):
        if rng.random() < 0.5:
            a = random_rational(rng, -4, 3, 4)
            b = a + Fraction(rng.randint(1, 16), 4)
            box.append(Bounded(a, b))
        else:
            box.append(RayToInfinity(random_rational(rng, -4, 4, 4)))
    return box


def _fmt_point(pt) -> str:
    return "(" + ", ".join("inf" if x == INF else str(x) for x in pt) + ")"


def _grid(k: int, step, lo, hi) -> Grid:
    return Grid(k, step=step, lo=-hi if lo is None else lo, hi=hi)


# -- suites -----------------------------------------------------------------


def suite_semiring(seed: int = 0, cases: int = 1000) -> Report:
    """Semiring axioms for dual numbers and the homomorphism property of pi."""
    rng = random.Random(seed)
    rep = Report("semiring")

    def rnd():
        a = random_trop(rng, p_inf=0.2)
        b = random_trop(rng, p_inf=0.3)
        return DualValue(a, b)

    def check(cond: bool, what: str, *xs):
        rep.checks += 1
        if not cond:
            rep.fail(what, xs)

    check(dual_mul(EPS, EPS) == ONE, "eps*eps == 1")
    for _ in range(cases):
        x, y, z = rnd(), rnd(), rnd()
        rep.cases += 1
        check(dual_add(x, y) == dual_add(y, x), "add commutative", x, y)
        check(dual_add(dual_add(x, y), z) == dual_add(x, dual_add(y, z)), "add associative", x, y, z)
        check(dual_add(x, x) == x, "add idempotent", x)
        check(dual_add(x, ZERO) == x, "additive identity", x)
        check(dual_mul(x, y) == dual_mul(y, x), "mul commutative", x, y)
        check(dual_mul(dual_mul(x, y), z) == dual_mul(x, dual_mul(y, z)), "mul associative", x, y, z)
        check(dual_mul(x, ONE) == x, "multiplicative identity", x)
        check(dual_mul(x, ZERO) == ZERO, "zero absorbing", x)
        check(dual_mul(x, dual_add(y, z)) == dual_add(dual_mul(x, y), dual_mul(x, z)), "distributive", x, y, z)
        check(pi(dual_add(x, y)) == trop_add(pi(x), pi(y)), "pi additive", x, y)
        check(pi(dual_mul(x, y)) == trop_mul(pi(x), pi(y)), "pi multiplicative", x, y)
        inv = dual_inverse(x)
        unit = (x.a == INF) != (x.b == INF)
        check((inv is not None) == unit, "inverse exists iff unit", x)
        if inv is not None:
            check(dual_mul(x, inv) == ONE, "inverse", x)
        u, v = DualValue(x.a, INF), DualValue(y.a, INF)
        check(dual_add(u, v) == DualValue(trop_add(x.a, y.a), INF), "T embeds (add)", x, y)
        check(dual_mul(u, v) == DualValue(trop_mul(x.a, y.a), INF), "T embeds (mul)", x, y)
    return rep


def suite_union(seed: int = 7, cases: int = 200, grid_step=Fraction(1, 8), grid_range=5, grid: bool = True) -> Report:
    """``V(fg) = V(f) ∪ V(g)`` as regions, with a grid cross-check."""
    rng = random.Random(seed)
    rep = Report("union")
    grids = {}
    for _ in range(cases):
        k = rng.randint(1, 2)
        f, g = random_poly(rng, k), random_poly(rng, k)
        rep.cases += 1
        fg = poly_mul(f, g)
        lhs, rhs = bend_region(fg), region_union(bend_region(f), bend_region(g))
        rep.checks += 1
        w = symmetric_witness(lhs, rhs)
        if w is not None:
            rep.fail(f"V(fg) != V(f) ∪ V(g) for f={f}, g={g}", _fmt_point(w))
            continue
        if grid:
            G = grids.setdefault(k, _grid(k, grid_step, None, grid_range))
            oracle = G.bend_mask(fg)
            for name, mask in (("region V(fg)", G.region_mask(lhs)), ("oracle V(f)|V(g)", mask_or(G.bend_mask(f), G.bend_mask(g)))):
                rep.checks += 1
                if not mask_equal(mask, oracle):
                    rep.fail(f"{name} disagrees with the definition for f={f}, g={g}", _fmt_point(G.first_difference(mask, oracle)))
    return rep


def suite_intersection(seed: int = 11, cases: int = 200, grid_step=Fraction(1, 8), grid_range=5, grid: bool = True) -> Report:
    """Intersections: ``V(f1) ∩ V(f2) ⊆ V(h1 f1 + h2 f2)``, and region = conjunction of bend tests."""
    rng = random.Random(seed)
    rep = Report("intersection")
    grids = {}
    for _ in range(cases):
        k = rng.randint(1, 2)
        f1, f2 = random_poly(rng, k), random_poly(rng, k)
        h1, h2 = random_poly(rng, k, max_terms=2), random_poly(rng, k, max_terms=2)
        rep.cases += 1
        both = variety_region([f1, f2])
        combo = poly_add(poly_mul(h1, f1), poly_mul(h2, f2))
        rep.checks += 1
        w = difference_witness(both, bend_region(combo))
        if w is not None:
            rep.fail(f"V(f1)∩V(f2) ⊄ V(h1 f1 + h2 f2) for f1={f1}, f2={f2}, h1={h1}, h2={h2}", _fmt_point(w))
            continue
        if grid:
            G = grids.setdefault(k, _grid(k, grid_step, None, grid_range))
            oracle = mask_and(G.bend_mask(f1), G.bend_mask(f2))
            mask = G.region_mask(both)
            rep.checks += 1
            if not mask_equal(mask, oracle):
                rep.fail(f"variety region disagrees with the definition for f1={f1}, f2={f2}", _fmt_point(G.first_difference(mask, oracle)))
            rep.checks += 1
            cm = G.bend_mask(combo)
            if not all(((~a) | b).all() for a, b in zip(oracle, cm)):
                rep.fail(f"grid point of V(f1)∩V(f2) outside V(h1 f1 + h2 f2) for f1={f1}, f2={f2}")
    return rep


def suite_inclusion(seed: int = 13, cases: int = 200, grid_step=Fraction(1, 8), grid_range=5, grid: bool = True) -> Report:
    """More generators give a smaller variety."""
    rng = random.Random(seed)
    rep = Report("inclusion")
    grids = {}
    for _ in range(cases):
        k = rng.randint(1, 2)
        gens = [random_poly(rng, k) for _ in range(rng.randint(0, 2))]
        more = gens + [random_poly(rng, k) for _ in range(rng.randint(1, 2))]
        rep.cases += 1
        small, big = variety_region(more, k), variety_region(gens, k)
        rep.checks += 1
        w = difference_witness(small, big)
        if w is not None:
            rep.fail(f"V({', '.join(map(str, more))}) ⊄ V({', '.join(map(str, gens))})", _fmt_point(w))
            continue
        if grid:
            G = grids.setdefault(k, _grid(k, grid_step, None, grid_range))
            oracle = mask_and(*[G.bend_mask(g) for g in more]) if more else None
            mask = G.region_mask(small)
            rep.checks += 1
            if not mask_equal(mask, oracle):
                rep.fail(f"variety region disagrees with the definition for {', '.join(map(str, more))}", _fmt_point(G.first_difference(mask, oracle)))
    return rep


def suite_principal(seed: int = 17, cases: int = 200, grid_step=Fraction(1, 8), grid_range=5, grid: bool = True) -> Report:
    """Every multiple of ``f`` bends wherever ``f`` does."""
    rng = random.Random(seed)
    rep = Report("principal")
    grids = {}
    for _ in range(cases):
        k = rng.randint(1, 2)
        f, h = random_poly(rng, k), random_poly(rng, k, max_terms=3)
        rep.cases += 1
        fh = poly_mul(f, h)
        vf, vfh = bend_region(f), bend_region(fh)
        rep.checks += 1
        w = difference_witness(vf, vfh)
        if w is not None:
            rep.fail(f"V(f) ⊄ V(fh) for f={f}, h={h}", _fmt_point(w))
            continue
        if grid:
            G = grids.setdefault(k, _grid(k, grid_step, None, grid_range))
            for poly, region in ((f, vf), (fh, vfh)):
                rep.checks += 1
                mask, oracle = G.region_mask(region), G.bend_mask(poly)
                if not mask_equal(mask, oracle):
                    rep.fail(f"bend region of {poly} disagrees with the definition", _fmt_point(G.first_difference(mask, oracle)))
    return rep


def suite_classical_agreement(seed: int = 1, cases: int = 100, grid_step=Fraction(1, 8), grid_range=5, grid: bool = True) -> Report:
    """For classical generators the dual-number variety is the classical prevariety."""
    rng = random.Random(seed)
    rep = Report("classical-agreement")
    grids = {}
    for _ in range(cases):
        k = rng.randint(1, 2)
        gens = [random_poly(rng, k, dual=False, min_terms=2) for _ in range(rng.randint(1, 2))]
        rep.cases += 1
        a, b = variety_region(gens), classical_variety_region(gens)
        rep.checks += 1
        w = symmetric_witness(a, b)
        if w is not None:
            rep.fail(f"dual and classical varieties differ for {', '.join(map(str, gens))}", _fmt_point(w))
            continue
        if grid:
            G = grids.setdefault(k, _grid(k, grid_step, None, grid_range))
            rep.checks += 1
            mask, oracle = G.region_mask(b), mask_and(*[G.bend_mask(g) for g in gens])
            if not mask_equal(mask, oracle):
                rep.fail(f"classical prevariety disagrees with the definition for {', '.join(map(str, gens))}", _fmt_point(G.first_difference(mask, oracle)))
    return rep


def suite_box_complement(seed: int = 3, boxes: int = 50, grid_step=Fraction(1, 8), grid_range=5) -> Report:
    """The bend loci of the box generators cover exactly the complement of the box."""
    rng = random.Random(seed)
    rep = Report("box-complement")
    grids = {}
    for _ in range(boxes):
        k = rng.randint(1, 2)
        box = random_box(rng, k)
        gens = box_complement_ideal(box)
        rep.cases += 1
        G = grids.setdefault(k, _grid(k, grid_step, None, grid_range))
        outside = mask_not(box_mask(G, box))
        union = region_union_all(k, (bend_region(g) for g in gens))
        for name, mask in (("region", G.region_mask(union)), ("oracle", mask_or(*[G.bend_mask(g) for g in gens]))):
            rep.checks += 1
            if not mask_equal(mask, outside):
                rep.fail(f"{name} union of V(f_i) is not the complement of box {box}", _fmt_point(G.first_difference(mask, outside)))
    return rep


def _random_pair(rng: random.Random, k: int) -> CongruencePair:
    return CongruencePair(random_poly(rng, k, max_terms=3, dual=False), random_poly(rng, k, max_terms=3, dual=False))


def suite_congruence_axioms(seed: int = 5, cases: int = 300, grid_step=Fraction(1, 4), grid_range=4) -> Report:
    """Pointwise congruence closure properties and region/definition agreement."""
    rng = random.Random(seed)
    rep = Report("congruence-axioms")
    grids = {}

    def check(cond: bool, what: str, pt):
        rep.checks += 1
        if not cond:
            rep.fail(what, _fmt_point(pt))

    for _ in range(cases):
        k = rng.randint(1, 2)
        p, q = _random_pair(rng, k), _random_pair(rng, k)
        r = CongruencePair(p.rhs, random_poly(rng, k, max_terms=3, dual=False))
        rep.cases += 1
        for _ in range(5):
            a = random_point(rng, k)
            check(satisfies(CongruencePair(p.lhs, p.lhs), a), f"reflexivity fails for {p.lhs}", a)
            check(satisfies(p, a) == satisfies(CongruencePair(p.rhs, p.lhs), a), f"symmetry fails for {p}", a)
            if satisfies(p, a) and satisfies(r, a):
                check(satisfies(CongruencePair(p.lhs, r.rhs), a), f"transitivity fails for {p}, {r}", a)
            if satisfies(p, a):
                check(satisfies(twisted_product(p, q), a), f"twisted product closure fails for {p} x {q}", a)
                if satisfies(q, a):
                    check(satisfies(pair_sum(p, q), a), f"sum closure fails for {p}, {q}", a)
                    check(satisfies(pair_product(p, q), a), f"product closure fails for {p}, {q}", a)
        G = grids.setdefault(k, _grid(k, grid_step, None, grid_range))
        mask, oracle = G.region_mask(congruence_region([p, q])), mask_and(G.congruence_mask(p), G.congruence_mask(q))
        rep.checks += 1
        if not mask_equal(mask, oracle):
            rep.fail(f"congruence region disagrees with the definition for {p}; {q}", _fmt_point(G.first_difference(mask, oracle)))
    return rep


def suite_halfspace(seed: int = 19, cases: int = 100) -> Report:
    """Embedded half-space congruence variety equals the variety of its classical ideal."""
    rng = random.Random(seed)
    rep = Report("halfspace")
    for _ in range(cases):
        k = rng.randint(1, 2)
        h = random_halfspace(rng, k)
        rep.cases += 1
        rep.checks += 1
        w = symmetric_witness(horizontal_embed(congruence_region([h.pair()])), variety_region(halfspace_congruence_to_ideal(h)))
        if w is not None:
            rep.fail(f"embedding mismatch for {h}", _fmt_point(w))
    return rep


FIXED_CONGRUENCES = ["x^2+x+1 ~ x", "x1+x2+0 ~ 0"]


def suite_dual_round_trip(seed: int = 23, cases: int = 100) -> Report:
    """``V(congruence_to_dual_ideal(E)) = V(E)`` for fixed and random half-space congruences."""
    rng = random.Random(seed)
    rep = Report("dual-round-trip")
    instances = [parse_congruence(t) for t in FIXED_CONGRUENCES]
    for _ in range(cases):
        instances.append([random_halfspace(rng, rng.randint(1, 2)).pair()])
    for pairs in instances:
        rep.cases += 1
        rep.checks += 1
        gens = congruence_to_dual_ideal(pairs, check=False)
        w = symmetric_witness(variety_region(gens, pairs[0].k), congruence_region(pairs))
        if w is not None:
            rep.fail(f"dual ideal {[str(g) for g in gens]} misses V(E) for {'; '.join(map(str, pairs))}", _fmt_point(w))
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "semiring": suite_semiring,
    "union": suite_union,
    "intersection": suite_intersection,
    "inclusion": suite_inclusion,
    "principal": suite_principal,
    "classical-agreement": suite_classical_agreement,
    "box-complement": suite_box_complement,
    "congruence-axioms": suite_congruence_axioms,
    "halfspace": suite_halfspace,
    "dual-round-trip": suite_dual_round_trip,
}

# what each ``tropdual verify`` target runs
VERIFY_GROUPS: dict[str, list[str]] = {name: [name] for name in SUITES}
VERIFY_GROUPS["all"] = list(SUITES)
