"""Exact arithmetic in the tropical semifield T and the tropical dual numbers.

A tropical value is either a :class:`fractions.Fraction` or :data:`INF`
(``math.inf``), which plays the role of the additive identity.  Tropical
addition is ``min`` and tropical multiplication is ordinary ``+``.

A :class:`DualValue` ``a + b*eps`` is stored in canonical form; ``eps**2`` is
the multiplicative identity, so products follow the twisted rule
``(a + b eps)(c + d eps) = min(a+c, b+d) + min(a+d, b+c) eps``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

INF = math.inf

TropValue = Union[Fraction, float]
Number = Union[int, Fraction, float, str]


def tv(x: Number) -> TropValue:
    """Coerce ``x`` to a tropical value (exact rational or INF)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "oo", "∞"):
            return INF
        return Fraction(s)
    if isinstance(x, float):
        if x == INF:
            return INF
        if math.isnan(x) or math.isinf(x):
            raise ValueError(f"not a tropical value: {x!r}")
    return Fraction(x)


def is_inf(x: TropValue) -> bool:
    return x == INF


def trop_add(x: TropValue, y: TropValue) -> TropValue:
    return x if x <= y else y


def trop_mul(x: TropValue, y: TropValue) -> TropValue:
    if x == INF or y == INF:
        return INF
    return x + y


def format_trop(x: TropValue) -> str:
    return "inf" if x == INF else str(x)


@dataclass(frozen=True)
class DualValue:
    """A tropical dual number ``a + b*eps``."""

    a: TropValue = INF
    b: TropValue = INF

    def __post_init__(self):
        object.__setattr__(self, "a", tv(self.a))
        object.__setattr__(self, "b", tv(self.b))

    @classmethod
    def of(cls, x) -> "DualValue":
        if isinstance(x, DualValue):
            return x
        return cls(tv(x), INF)

    def __add__(self, other: "DualValue") -> "DualValue":
        return dual_add(self, DualValue.of(other))

    __radd__ = __add__

    def __mul__(self, other: "DualValue") -> "DualValue":
        return dual_mul(self, DualValue.of(other))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return self.a == INF and self.b == INF

    @property
    def is_classical(self) -> bool:
        return self.b == INF

    def __str__(self) -> str:
        return format_dual(self)

    def __repr__(self) -> str:
        return f"DualValue({format_dual(self)!r})"


ZERO = DualValue(INF, INF)
ONE = DualValue(Fraction(0), INF)
EPS = DualValue(INF, Fraction(0))


def dual_add(x: DualValue, y: DualValue) -> DualValue:
    return DualValue(trop_add(x.a, y.a), trop_add(x.b, y.b))


def dual_mul(x: DualValue, y: DualValue) -> DualValue:
    a = trop_add(trop_mul(x.a, y.a), trop_mul(x.b, y.b))
    b = trop_add(trop_mul(x.a, y.b), trop_mul(x.b, y.a))
    return DualValue(a, b)


def dual_inverse(x: DualValue) -> Optional[DualValue]:
    """Return ``-x`` if ``x`` is a unit, else ``None``.

    Units are exactly the elements with one finite and one infinite component.
    """
    if (x.a == INF) == (x.b == INF):
        return None
    neg = lambda t: INF if t == INF else -t  # noqa: E731
    return DualValue(neg(x.a), neg(x.b))


def pi(x: DualValue) -> TropValue:
    """Evaluate eps at 1_T: ``a + b eps -> min(a, b)``."""
    return trop_add(x.a, x.b)


def format_dual(x: DualValue) -> str:
    a, b = x.a, x.b
    if b == INF:
        return format_trop(a)
    eps = "e" if b == 0 else f"{b}e"
    if a == INF:
        return eps
    return f"{a}+{b}e"
