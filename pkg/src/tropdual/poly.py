"""Polynomials over the tropical dual numbers in ``k`` variables.

Classical tropical polynomials are the special case where every coefficient
has an infinite eps-part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Tuple

from .arith import (
    INF,
    ONE,
    ZERO,
    DualValue,
    TropValue,
    dual_add,
    dual_mul,
    pi,
    trop_add,
    tv,
)

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class SimpleTerm:
    """A monomial ``coeff * x^exponent * eps^eps_degree`` of T[x, eps]."""

    exponent: Exponent
    coeff: Fraction
    eps_degree: int

    def value(self, point: Sequence[TropValue]) -> TropValue:
        return monomial_value(self.exponent, self.coeff, point)


def monomial_value(n: Exponent, c: TropValue, point: Sequence[TropValue]) -> TropValue:
    """``c + n.a`` with ``x_i^0 = 0`` even when ``a_i`` is infinite."""
    if c == INF:
        return INF
    total = c
    for e, x in zip(n, point):
        if e:
            if x == INF:
                return INF
            total = total + e * x
    return total


class DualPolynomial:
    """Finitely supported map from exponent vectors to nonzero dual coefficients."""

    __slots__ = ("_k", "_terms", "_hash")

    def __init__(self, k: int, terms: Mapping[Exponent, DualValue] | Iterable = ()):
        if k < 0:
            raise ValueError("variable count must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[Exponent, DualValue] = {}
        for n, c in items:
            n = tuple(int(e) for e in n)
            if len(n) != k:
                raise ValueError(f"exponent {n} does not have length {k}")
            if any(e < 0 for e in n):
                raise ValueError(f"negative exponent in {n}")
            c = DualValue.of(c)
            merged[n] = dual_add(merged[n], c) if n in merged else c
        self._k = k
        self._terms = MappingProxyType(
            {n: merged[n] for n in sorted(merged, key=_term_order) if not merged[n].is_zero}
        )
        self._hash = None

    @property
    def k(self) -> int:
        return self._k

    @property
    def terms(self) -> Mapping[Exponent, DualValue]:
        return self._terms

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, k: int) -> "DualPolynomial":
        return cls(k)

    @classmethod
    def constant(cls, k: int, c) -> "DualPolynomial":
        return cls(k, [((0,) * k, DualValue.of(c))])

    @classmethod
    def one(cls, k: int) -> "DualPolynomial":
        return cls.constant(k, ONE)

    @classmethod
    def monomial(cls, k: int, n: Sequence[int], c=ONE) -> "DualPolynomial":
        return cls(k, [(tuple(n), DualValue.of(c))])

    @classmethod
    def var(cls, k: int, i: int) -> "DualPolynomial":
        n = [0] * k
        n[i] = 1
        return cls.monomial(k, n)

    # -- semiring structure -----------------------------------------------

    def __add__(self, other: "DualPolynomial") -> "DualPolynomial":
        return poly_add(self, other)

    def __mul__(self, other: "DualPolynomial") -> "DualPolynomial":
        return poly_mul(self, other)

    def __pow__(self, e: int) -> "DualPolynomial":
        out = DualPolynomial.one(self.k)
        for _ in range(e):
            out = poly_mul(out, self)
        return out

    def __call__(self, point: Sequence) -> DualValue:
        return poly_eval(self, point)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DualPolynomial):
            return NotImplemented
        return self._k == other._k and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._k, tuple(self._terms.items())))
        return self._hash

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_classical(self) -> bool:
        return all(c.is_classical for c in self._terms.values())

    def extend(self, extra: int = 1) -> "DualPolynomial":
        """The same polynomial viewed in ``k + extra`` variables."""
        return DualPolynomial(self._k + extra, [(n + (0,) * extra, c) for n, c in self._terms.items()])

    def __str__(self) -> str:
        from .parse import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"DualPolynomial({self._k}, {str(self)!r})"


def _term_order(n: Exponent):
    return (-sum(n), tuple(-e for e in n))


def _check_k(f: DualPolynomial, g: DualPolynomial) -> None:
    if f.k != g.k:
        raise ValueError(f"variable counts differ: {f.k} vs {g.k}")


def poly_add(f: DualPolynomial, g: DualPolynomial) -> DualPolynomial:
    _check_k(f, g)
    return DualPolynomial(f.k, list(f.terms.items()) + list(g.terms.items()))


def poly_mul(f: DualPolynomial, g: DualPolynomial) -> DualPolynomial:
    _check_k(f, g)
    out: dict[Exponent, DualValue] = {}
    for n, c in f.terms.items():
        for m, d in g.terms.items():
            e = tuple(i + j for i, j in zip(n, m))
            p = dual_mul(c, d)
            out[e] = dual_add(out[e], p) if e in out else p
    return DualPolynomial(f.k, out)


def poly_eval(f: DualPolynomial, point: Sequence) -> DualValue:
    """Evaluate ``f`` at a point of T^k."""
    point = [tv(x) for x in point]
    if len(point) != f.k:
        raise ValueError(f"point has {len(point)} coordinates, expected {f.k}")
    a, b = INF, INF
    for n, c in f.terms.items():
        a = trop_add(a, monomial_value(n, c.a, point))
        b = trop_add(b, monomial_value(n, c.b, point))
    return DualValue(a, b)


def poly_pi(f: DualPolynomial) -> DualPolynomial:
    return DualPolynomial(f.k, [(n, DualValue(pi(c), INF)) for n, c in f.terms.items()])


def simple_terms(f: DualPolynomial) -> list[SimpleTerm]:
    out = []
    for n, c in f.terms.items():
        if c.a != INF:
            out.append(SimpleTerm(n, c.a, 0))
        if c.b != INF:
            out.append(SimpleTerm(n, c.b, 1))
    return out


def is_classical(f: DualPolynomial) -> bool:
    return f.is_classical


__all__ = [
    "DualPolynomial",
    "Exponent",
    "SimpleTerm",
    "ZERO",
    "is_classical",
    "monomial_value",
    "poly_add",
    "poly_eval",
    "poly_mul",
    "poly_pi",
    "simple_terms",
]
