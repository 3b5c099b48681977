"""Exact rational polyhedra with strict and non-strict constraints.

Everything here runs over :class:`fractions.Fraction`.  Emptiness is decided
by Fourier-Motzkin elimination; containment of a polyhedron in a finite union
of polyhedra is decided by recursive splitting along negated facets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Sequence

RELATIONS = ("le", "lt", "eq")


class CoverUndecided(RuntimeError):
    """The cover recursion exceeded its depth limit."""


@dataclass(frozen=True)
class LinearConstraint:
    """``coeffs . x  rel  rhs`` with ``rel`` one of ``le``, ``lt``, ``eq``."""

    coeffs: tuple
    rhs: Fraction
    rel: str = "le"

    def __post_init__(self):
        if self.rel not in RELATIONS:
            raise ValueError(f"unknown relation {self.rel!r}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @property
    def is_ground(self) -> bool:
        return not any(self.coeffs)

    @property
    def strict(self) -> bool:
        return self.rel == "lt"

    def lhs(self, x: Sequence) -> Fraction:
        return sum((c * xi for c, xi in zip(self.coeffs, x) if c), Fraction(0))

    def holds(self, x: Sequence) -> bool:
        v = self.lhs(x)
        if self.rel == "le":
            return v <= self.rhs
        if self.rel == "lt":
            return v < self.rhs
        return v == self.rhs

    def negations(self) -> list["LinearConstraint"]:
        """Constraints whose union is the complement of this one."""
        neg = tuple(-c for c in self.coeffs)
        if self.rel == "le":
            return [LinearConstraint(neg, -self.rhs, "lt")]
        if self.rel == "lt":
            return [LinearConstraint(neg, -self.rhs, "le")]
        return [
            LinearConstraint(self.coeffs, self.rhs, "lt"),
            LinearConstraint(neg, -self.rhs, "lt"),
        ]

    def closed(self) -> "LinearConstraint":
        return LinearConstraint(self.coeffs, self.rhs, "le") if self.rel == "lt" else self

    def __str__(self) -> str:
        terms = [f"{c}*x{i}" for i, c in enumerate(self.coeffs) if c]
        op = {"le": "<=", "lt": "<", "eq": "="}[self.rel]
        return f"{' + '.join(terms) or '0'} {op} {self.rhs}"


def _ground_truth(rel: str, rhs: Fraction) -> bool:
    if rel == "le":
        return 0 <= rhs
    if rel == "lt":
        return 0 < rhs
    return rhs == 0


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def normalize(h: LinearConstraint) -> Optional[LinearConstraint]:
    """Scale to a primitive integer coefficient vector.

    Returns None for a ground constraint that always holds and the canonical
    false constraint ``0 < 0`` for one that never holds.
    """
    if h.is_ground:
        if _ground_truth(h.rel, h.rhs):
            return None
        return LinearConstraint((0,) * h.dim, 0, "lt")
    scale = reduce(_lcm, (c.denominator for c in h.coeffs), 1)
    ints = [int(c * scale) for c in h.coeffs]
    g = reduce(math.gcd, (abs(c) for c in ints if c))
    factor = Fraction(scale, g)
    if h.rel == "eq" and next(c for c in ints if c) < 0:
        factor = -factor
    return LinearConstraint(tuple(c * factor for c in h.coeffs), h.rhs * factor, h.rel)


def _tighter(h: LinearConstraint, g: LinearConstraint) -> LinearConstraint:
    if h.rhs != g.rhs:
        return h if h.rhs < g.rhs else g
    return h if h.strict else g


def reduce_constraints(constraints: Iterable[LinearConstraint]) -> tuple:
    """Normalize, drop tautologies, and keep the tightest of parallel inequalities."""
    ineq: dict = {}
    eqs: dict = {}
    false = None
    for h in constraints:
        n = normalize(h)
        if n is None:
            continue
        if n.is_ground:
            false = n
            continue
        if n.rel == "eq":
            eqs[(n.coeffs, n.rhs)] = n
        else:
            old = ineq.get(n.coeffs)
            ineq[n.coeffs] = n if old is None else _tighter(old, n)
    out = list(eqs.values()) + list(ineq.values())
    if false is not None:
        out.append(false)
    return tuple(sorted(out, key=_constraint_key))


def _constraint_key(h: LinearConstraint):
    return (h.rel, h.coeffs, h.rhs)


class Polyhedron:
    """Conjunction of linear constraints in ``dim`` real variables."""

    __slots__ = ("dim", "constraints", "_empty")

    def __init__(self, dim: int, constraints: Iterable[LinearConstraint] = ()):
        constraints = list(constraints)
        for h in constraints:
            if h.dim != dim:
                raise ValueError(f"constraint of length {h.dim} in a {dim}-dimensional polyhedron")
        self.dim = dim
        self.constraints = reduce_constraints(constraints)
        self._empty = None

    @classmethod
    def whole(cls, dim: int) -> "Polyhedron":
        return cls(dim, ())

    def __and__(self, other: "Polyhedron") -> "Polyhedron":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return Polyhedron(self.dim, self.constraints + other.constraints)

    def with_constraints(self, extra: Iterable[LinearConstraint]) -> "Polyhedron":
        return Polyhedron(self.dim, self.constraints + tuple(extra))

    def __contains__(self, x) -> bool:
        return contains_point(self, x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polyhedron):
            return NotImplemented
        return self.dim == other.dim and self.constraints == other.constraints

    def __hash__(self) -> int:
        return hash((self.dim, self.constraints))

    @property
    def has_strict(self) -> bool:
        return any(h.strict for h in self.constraints)

    def closure(self) -> "Polyhedron":
        return Polyhedron(self.dim, [h.closed() for h in self.constraints])

    def __repr__(self) -> str:
        body = ", ".join(str(h) for h in self.constraints)
        return f"Polyhedron({self.dim}, [{body}])"


def contains_point(p: Polyhedron, x: Sequence) -> bool:
    if len(x) != p.dim:
        raise ValueError(f"point of length {len(x)} in a {p.dim}-dimensional polyhedron")
    x = [Fraction(v) for v in x]
    return all(h.holds(x) for h in p.constraints)


def _drop(seq: Sequence, j: int) -> tuple:
    return tuple(seq[:j]) + tuple(seq[j + 1:])


def _eliminate(constraints: Sequence[LinearConstraint], j: int) -> list[LinearConstraint]:
    pivot = next((h for h in constraints if h.rel == "eq" and h.coeffs[j]), None)
    if pivot is not None:
        out = []
        for h in constraints:
            if h is pivot:
                continue
            t = h.coeffs[j] / pivot.coeffs[j]
            coeffs = tuple(c - t * pc for c, pc in zip(h.coeffs, pivot.coeffs))
            out.append(LinearConstraint(_drop(coeffs, j), h.rhs - t * pivot.rhs, h.rel))
        return out
    lower, upper, out = [], [], []
    for h in constraints:
        c = h.coeffs[j]
        if c > 0:
            upper.append(h)
        elif c < 0:
            lower.append(h)
        else:
            out.append(LinearConstraint(_drop(h.coeffs, j), h.rhs, h.rel))
    for lo in lower:
        for up in upper:
            s, t = up.coeffs[j], -lo.coeffs[j]
            coeffs = tuple(s * a + t * b for a, b in zip(lo.coeffs, up.coeffs))
            rel = "lt" if lo.strict or up.strict else "le"
            out.append(LinearConstraint(_drop(coeffs, j), s * lo.rhs + t * up.rhs, rel))
    return out


def fm_eliminate(p: Polyhedron, var_index: int) -> Polyhedron:
    """Project out coordinate ``var_index`` by Fourier-Motzkin elimination."""
    if not 0 <= var_index < p.dim:
        raise IndexError(f"variable {var_index} out of range for dimension {p.dim}")
    return Polyhedron(p.dim - 1, _eliminate(p.constraints, var_index))


def _choose_variable(p: Polyhedron) -> int:
    best, best_cost = 0, None
    for j in range(p.dim):
        if any(h.rel == "eq" and h.coeffs[j] for h in p.constraints):
            return j
        pos = sum(1 for h in p.constraints if h.coeffs[j] > 0)
        neg = sum(1 for h in p.constraints if h.coeffs[j] < 0)
        cost = pos * neg - pos - neg
        if best_cost is None or cost < best_cost:
            best, best_cost = j, cost
    return best


def _infeasible_ground(p: Polyhedron) -> bool:
    return any(h.is_ground for h in p.constraints)


def is_empty(p: Polyhedron) -> bool:
    if p._empty is None:
        q = p
        while not _infeasible_ground(q) and q.dim > 0 and q.constraints:
            q = fm_eliminate(q, _choose_variable(q))
        p._empty = _infeasible_ground(q)
    return p._empty


def _pick(lo, lo_strict, hi, hi_strict) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi - 1 if hi_strict else hi
    if hi is None:
        return lo + 1 if lo_strict else lo
    if lo == hi:
        return lo
    if not lo_strict and lo <= 0 <= hi and not (hi_strict and hi == 0):
        return Fraction(0)
    if not lo_strict:
        return lo
    if not hi_strict:
        return hi
    return (lo + hi) / 2


def sample_point(p: Polyhedron) -> Optional[tuple]:
    """A rational point of ``p``, or None if ``p`` is empty.

    Eliminates coordinates from last to first and back-substitutes, choosing
    each coordinate inside the interval left by the already fixed ones.
    """
    if is_empty(p):
        return None
    systems = [list(p.constraints)]
    for d in range(p.dim, 0, -1):
        systems.append(list(reduce_constraints(_eliminate(systems[-1], d - 1))))
    point: list[Fraction] = []
    for d in range(1, p.dim + 1):
        cons = systems[p.dim - d]
        lo = hi = None
        lo_strict = hi_strict = False
        fixed = None
        for h in cons:
            c = h.coeffs[d - 1]
            rest = h.rhs - sum((a * b for a, b in zip(h.coeffs[: d - 1], point)), Fraction(0))
            if not c:
                continue
            bound = rest / c
            if h.rel == "eq":
                fixed = bound
            elif c > 0:
                if hi is None or bound < hi or (bound == hi and h.strict):
                    hi, hi_strict = bound, h.strict
            else:
                if lo is None or bound > lo or (bound == lo and h.strict):
                    lo, lo_strict = bound, h.strict
        point.append(fixed if fixed is not None else _pick(lo, lo_strict, hi, hi_strict))
    pt = tuple(point)
    assert contains_point(p, pt), (p, pt)
    return pt


def default_depth_limit(pieces: Sequence[Polyhedron]) -> int:
    width = max((len(q.constraints) for q in pieces), default=1)
    return 10 * max(len(pieces), 1) * max(width, 1)


def uncovered_part(
    p: Polyhedron, pieces: Sequence[Polyhedron], max_depth: Optional[int] = None
) -> Optional[Polyhedron]:
    """A nonempty sub-polyhedron of ``p`` missed by ``pieces``, or None if covered."""
    limit = default_depth_limit(pieces) if max_depth is None else max_depth

    def go(p: Polyhedron, pieces: list, depth: int) -> Optional[Polyhedron]:
        if is_empty(p):
            return None
        pieces = [q for q in pieces if not is_empty(p & q)]
        if not pieces:
            return p
        if depth >= limit:
            raise CoverUndecided(f"cover recursion exceeded depth {limit}")
        q, rest = pieces[0], pieces[1:]
        prefix: list[LinearConstraint] = []
        for h in q.constraints:
            for nh in h.negations():
                miss = go(p.with_constraints(prefix + [nh]), rest, depth + 1)
                if miss is not None:
                    return miss
            prefix.append(h)
        return None

    for q in pieces:
        if q.dim != p.dim:
            raise ValueError("dimension mismatch in cover check")
    return go(p, list(pieces), 0)


def region_covers(p: Polyhedron, pieces: Sequence[Polyhedron], max_depth: Optional[int] = None) -> bool:
    """Decide ``p ⊆ ⋃ pieces``; raises CoverUndecided past the depth limit."""
    return uncovered_part(p, pieces, max_depth) is None


def drop_redundant(p: Polyhedron) -> Polyhedron:
    """Remove inequalities implied by the remaining constraints."""
    cons = list(p.constraints)
    i = 0
    while i < len(cons):
        h = cons[i]
        if h.rel != "eq":
            rest = cons[:i] + cons[i + 1:]
            if all(is_empty(Polyhedron(p.dim, rest + [nh])) for nh in h.negations()):
                cons = rest
                continue
        i += 1
    return Polyhedron(p.dim, cons)


def simplify_pieces(polys: Sequence[Polyhedron]) -> list[Polyhedron]:
    """Drop pieces contained in another piece and redundant constraints."""
    polys = [drop_redundant(p) for p in polys if not is_empty(p)]
    keep: list[Polyhedron] = []
    for i, p in enumerate(polys):
        others = keep + polys[i + 1:]
        if not any(region_covers(p, [q]) for q in others):
            keep.append(p)
    return keep
