"""Rational sample grids over T^k and exact vectorized membership masks.

Points are stored as integer numerators over one common denominator, so
every comparison is exact integer arithmetic.  The term-level masks
(:meth:`Grid.bend_mask`, :meth:`Grid.congruence_mask`) evaluate the
definitions directly and share no code with the polyhedral regions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Iterator, Optional

import numpy as np

from .arith import INF
from .poly import DualPolynomial, simple_terms
from .region import Region, all_strata, free_coords

_SAFE = 2**62


def _lcm(*xs: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), xs, 1)


def _axis(lo: Fraction, hi: Fraction, step: Fraction, denom: int) -> np.ndarray:
    count = int((hi - lo) / step)
    return np.array([int((lo + i * step) * denom) for i in range(count + 1)], dtype=np.int64)


@dataclass(frozen=True)
class GridStratum:
    stratum: frozenset
    free: tuple
    nums: np.ndarray  # (N, len(free)) numerators over Grid.denom

    def point(self, row: int, k: int, denom: int) -> tuple:
        vals = iter(Fraction(int(v), denom) for v in self.nums[row])
        return tuple(INF if i in self.stratum else next(vals) for i in range(k))


class Grid:
    """All points of ``[lo, hi]^k`` at ``step``, plus every infinity stratum at ``inf_step``."""

    def __init__(self, k: int, step=Fraction(1, 8), lo=-5, hi=5, inf_step=Fraction(1, 2), with_inf: bool = True):
        self.k = k
        step, inf_step = Fraction(step), Fraction(inf_step)
        lo, hi = Fraction(lo), Fraction(hi)
        self.denom = _lcm(step.denominator, inf_step.denominator, lo.denominator)
        self.strata: list[GridStratum] = []
        for s in all_strata(k) if with_inf else [frozenset()]:
            free = tuple(free_coords(k, s))
            axis = _axis(lo, hi, step if not s else inf_step, self.denom)
            if free:
                mesh = np.stack(np.meshgrid(*([axis] * len(free)), indexing="ij"), axis=-1).reshape(-1, len(free))
            else:
                mesh = np.zeros((1, 0), dtype=np.int64)
            self.strata.append(GridStratum(s, free, mesh))

    @property
    def size(self) -> int:
        return sum(len(st.nums) for st in self.strata)

    def points(self) -> Iterator[tuple]:
        for st in self.strata:
            for r in range(len(st.nums)):
                yield st.point(r, self.k, self.denom)

    # -- masks ------------------------------------------------------------

    def _affine(self, coeffs, rhs: Fraction, nums: np.ndarray):
        """Integer form ``(A . P, b)`` of ``coeffs . (P / denom)`` against ``rhs``."""
        scale = _lcm(*(Fraction(c).denominator for c in coeffs), Fraction(rhs).denominator)
        a = [int(Fraction(c) * scale) for c in coeffs]
        b = int(Fraction(rhs) * scale) * self.denom
        bound = (sum(abs(x) for x in a) * (int(np.abs(nums).max()) if nums.size else 0)) + abs(b)
        if bound < _SAFE:
            lhs = nums @ np.array(a, dtype=np.int64) if a else np.zeros(len(nums), dtype=np.int64)
            return lhs, b
        obj = nums.astype(object)
        lhs = obj @ np.array(a, dtype=object) if a else np.zeros(len(nums), dtype=object)
        return lhs, b

    def region_mask(self, region: Region) -> list[np.ndarray]:
        if region.k != self.k:
            raise ValueError("grid and region dimensions differ")
        out = []
        for st in self.strata:
            mask = np.zeros(len(st.nums), dtype=bool)
            for p in region.pieces(st.stratum):
                inside = np.ones(len(st.nums), dtype=bool)
                for h in p.constraints:
                    lhs, b = self._affine(h.coeffs, h.rhs, st.nums)
                    if h.rel == "le":
                        inside &= lhs <= b
                    elif h.rel == "lt":
                        inside &= lhs < b
                    else:
                        inside &= lhs == b
                mask |= inside
            out.append(mask)
        return out

    def bend_mask(self, f: DualPolynomial) -> list[np.ndarray]:
        """Definitional membership in ``V(f)`` at every grid point."""
        terms = [(t.exponent, t.coeff) for t in simple_terms(f)]
        out = []
        for st in self.strata:
            out.append(_min_attained_twice(self._common(terms, st), len(st.nums)))
        return out

    def _common(self, terms, st: GridStratum) -> list[np.ndarray]:
        live = [(n, c) for n, c in terms if not any(n[i] for i in st.stratum)]
        if not live:
            return []
        scale = _lcm(*(Fraction(c).denominator for _, c in live))
        peak = int(np.abs(st.nums).max()) if st.nums.size else 0
        ints = [([n[i] * scale for i in st.free], int(c * scale) * self.denom) for n, c in live]
        safe = all(sum(abs(x) for x in a) * peak + abs(b) < _SAFE for a, b in ints)
        dtype = np.int64 if safe else object
        nums = st.nums if safe else st.nums.astype(object)
        out = []
        for a, base in ints:
            prod = nums @ np.array(a, dtype=dtype) if st.free else np.zeros(len(nums), dtype=dtype)
            out.append(prod + base)
        return out

    def congruence_mask(self, pair) -> list[np.ndarray]:
        """Definitional ``lhs(a) == rhs(a)`` at every grid point."""
        left = [(t.exponent, t.coeff) for t in simple_terms(pair.lhs)]
        right = [(t.exponent, t.coeff) for t in simple_terms(pair.rhs)]
        out = []
        for st in self.strata:
            lv, rv = self._pair_common(left, right, st)
            n = len(st.nums)
            if lv is None and rv is None:
                out.append(np.ones(n, dtype=bool))
            elif lv is None or rv is None:
                out.append(np.zeros(n, dtype=bool))
            else:
                out.append(lv == rv)
        return out

    def _pair_common(self, left, right, st: GridStratum):
        both = self._common(left + right, st)
        nl = sum(1 for n, _ in left if not any(n[i] for i in st.stratum))
        lvals, rvals = both[:nl], both[nl:]
        lmin = np.min(np.stack(lvals), axis=0) if lvals else None
        rmin = np.min(np.stack(rvals), axis=0) if rvals else None
        return lmin, rmin

    def predicate_mask(self, pred: Callable[[tuple], bool]) -> list[np.ndarray]:
        """Slow path: evaluate an arbitrary point predicate everywhere."""
        return [
            np.array([pred(st.point(r, self.k, self.denom)) for r in range(len(st.nums))], dtype=bool)
            for st in self.strata
        ]

    def first_difference(self, a: list[np.ndarray], b: list[np.ndarray]) -> Optional[tuple]:
        for st, ma, mb in zip(self.strata, a, b):
            diff = np.nonzero(ma != mb)[0]
            if len(diff):
                return st.point(int(diff[0]), self.k, self.denom)
        return None


def _min_attained_twice(values: list[np.ndarray], n_points: int) -> np.ndarray:
    if not values:
        # every term is infinite here: the value is 0 and the point counts
        return np.ones(n_points, dtype=bool)
    if len(values) < 2:
        return np.zeros(n_points, dtype=bool)
    stack = np.stack(values)
    low = np.min(stack, axis=0)
    return (stack == low).sum(axis=0) >= 2


def combine(masks: list[list[np.ndarray]], op) -> list[np.ndarray]:
    return [reduce(op, parts) for parts in zip(*masks)]


def mask_or(*masks):
    return combine(list(masks), np.logical_or)


def mask_and(*masks):
    return combine(list(masks), np.logical_and)


def mask_not(mask):
    return [~m for m in mask]


def mask_equal(a, b) -> bool:
    return all(np.array_equal(x, y) for x, y in zip(a, b))


def box_mask(grid: Grid, box) -> list[np.ndarray]:
    from .constructions import box_contains

    return grid.predicate_mask(lambda pt: box_contains(box, pt))


__all__ = [
    "Grid",
    "box_mask",
    "mask_and",
    "mask_equal",
    "mask_not",
    "mask_or",
]
