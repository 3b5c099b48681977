"""Subsets of T^k as finite unions of polyhedra, one list per infinity stratum.

A stratum is keyed by the set ``S`` of coordinates pinned to infinity; its
polyhedra live in the remaining coordinates, taken in increasing order.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .arith import INF, tv
from .polyhedra import LinearConstraint, Polyhedron, is_empty, sample_point, simplify_pieces, uncovered_part

Stratum = frozenset


def all_strata(k: int) -> list[frozenset]:
    return [frozenset(c) for r in range(k + 1) for c in itertools.combinations(range(k), r)]


def free_coords(k: int, stratum: Iterable[int]) -> list[int]:
    s = set(stratum)
    return [i for i in range(k) if i not in s]


class Region:
    """Finite union of rational polyhedra organized by infinity strata."""

    __slots__ = ("k", "strata")

    def __init__(self, k: int, strata: Mapping[Iterable[int], Iterable[Polyhedron]] = (), prune: bool = True):
        self.k = k
        items = strata.items() if isinstance(strata, Mapping) else strata
        out: dict[frozenset, list[Polyhedron]] = {}
        for s, polys in items:
            s = frozenset(s)
            if not s <= set(range(k)):
                raise ValueError(f"stratum {sorted(s)} out of range for k={k}")
            dim = k - len(s)
            bucket = out.setdefault(s, [])
            for p in polys:
                if p.dim != dim:
                    raise ValueError(f"polyhedron of dim {p.dim} in stratum {sorted(s)} (expected {dim})")
                if prune and is_empty(p):
                    continue
                if p not in bucket:
                    bucket.append(p)
        self.strata = {s: tuple(v) for s, v in sorted(out.items(), key=lambda kv: _stratum_key(kv[0])) if v}

    @classmethod
    def empty(cls, k: int) -> "Region":
        return cls(k)

    @classmethod
    def whole(cls, k: int) -> "Region":
        return cls(k, {s: [Polyhedron.whole(k - len(s))] for s in all_strata(k)})

    @classmethod
    def finite(cls, k: int, polys: Iterable[Polyhedron]) -> "Region":
        """Region supported on the all-finite stratum only."""
        return cls(k, {frozenset(): polys})

    def pieces(self, stratum: Iterable[int]) -> tuple:
        return self.strata.get(frozenset(stratum), ())

    def __contains__(self, point) -> bool:
        return contains(self, point)

    @property
    def is_empty(self) -> bool:
        return not self.strata

    def __eq__(self, other) -> bool:
        """Identical presentation; use :func:`region_equal` for set equality."""
        if not isinstance(other, Region):
            return NotImplemented
        return self.k == other.k and self.strata == other.strata

    __hash__ = None

    def __repr__(self) -> str:
        return f"Region(k={self.k}, strata={ {tuple(sorted(s)): len(v) for s, v in self.strata.items()} })"


def simplify_region(region: Region) -> Region:
    """Same set, with covered pieces and redundant inequalities removed."""
    return Region(region.k, {s: simplify_pieces(polys) for s, polys in region.strata.items()})


def _stratum_key(s: frozenset):
    return (len(s), sorted(s))


def split_point(point: Sequence, k: int) -> tuple[frozenset, tuple]:
    pt = [tv(x) for x in point]
    if len(pt) != k:
        raise ValueError(f"point has {len(pt)} coordinates, expected {k}")
    s = frozenset(i for i, x in enumerate(pt) if x == INF)
    return s, tuple(x for x in pt if x != INF)


def contains(region: Region, point: Sequence) -> bool:
    s, finite = split_point(point, region.k)
    return any(all(h.holds(finite) for h in p.constraints) for p in region.pieces(s))


def _check_k(a: Region, b: Region) -> None:
    if a.k != b.k:
        raise ValueError(f"regions in different dimensions: {a.k} vs {b.k}")


def region_union(a: Region, b: Region) -> Region:
    _check_k(a, b)
    strata: dict = {}
    for r in (a, b):
        for s, polys in r.strata.items():
            strata.setdefault(s, []).extend(polys)
    return Region(a.k, strata)


def region_intersect(a: Region, b: Region) -> Region:
    _check_k(a, b)
    strata = {}
    for s in set(a.strata) & set(b.strata):
        strata[s] = [p & q for p in a.strata[s] for q in b.strata[s]]
    return Region(a.k, strata)


def region_union_all(k: int, regions: Iterable[Region]) -> Region:
    out = Region.empty(k)
    for r in regions:
        out = region_union(out, r)
    return out


def region_intersect_all(k: int, regions: Iterable[Region]) -> Region:
    out = Region.whole(k)
    for r in regions:
        out = region_intersect(out, r)
    return out


def difference_witness(a: Region, b: Region, max_depth: Optional[int] = None) -> Optional[tuple]:
    """A point of ``a`` outside ``b`` (infinite coordinates as INF), or None if ``a ⊆ b``."""
    _check_k(a, b)
    for s, polys in a.strata.items():
        others = b.pieces(s)
        for p in polys:
            miss = uncovered_part(p, others, max_depth)
            if miss is not None:
                finite = iter(sample_point(miss))
                return tuple(INF if i in s else next(finite) for i in range(a.k))
    return None


def region_subset(a: Region, b: Region, max_depth: Optional[int] = None) -> bool:
    return difference_witness(a, b, max_depth) is None


def region_equal(a: Region, b: Region, max_depth: Optional[int] = None) -> bool:
    """Stratum-wise mutual cover; raises CoverUndecided past the depth limit."""
    return region_subset(a, b, max_depth) and region_subset(b, a, max_depth)


def symmetric_witness(a: Region, b: Region) -> Optional[tuple]:
    """A point in exactly one of ``a`` and ``b``, or None when they are equal."""
    w = difference_witness(a, b)
    return w if w is not None else difference_witness(b, a)


# -- serialization ----------------------------------------------------------


def _q(x: Fraction) -> str:
    return str(Fraction(x))


def to_json(region: Region) -> dict:
    return {
        "k": region.k,
        "strata": [
            {
                "inf_coords": sorted(s),
                "polyhedra": [
                    {
                        "constraints": [
                            {"coeffs": [_q(c) for c in h.coeffs], "rel": h.rel, "rhs": _q(h.rhs)}
                            for h in p.constraints
                        ]
                    }
                    for p in polys
                ],
            }
            for s, polys in region.strata.items()
        ],
    }


def from_json(data: dict) -> Region:
    k = int(data["k"])
    strata = {}
    for entry in data["strata"]:
        s = frozenset(int(i) for i in entry["inf_coords"])
        dim = k - len(s)
        polys = []
        for p in entry["polyhedra"]:
            cons = [
                LinearConstraint(tuple(Fraction(c) for c in h["coeffs"]), Fraction(h["rhs"]), h["rel"])
                for h in p["constraints"]
            ]
            polys.append(Polyhedron(dim, cons))
        strata.setdefault(s, []).extend(polys)
    return Region(k, strata)


def dumps(region: Region, **kw) -> str:
    return json.dumps(to_json(region), **kw)


def loads(text: str) -> Region:
    return from_json(json.loads(text))
