"""Text grammar for dual values, polynomials, and congruences.

    expr   := term ('+' term)*
    term   := factor ('*'? factor)*
    factor := atom ('^' INT)?
    atom   := NUMBER | 'e' | 'inf' | VAR | '(' expr ')'

``+`` is tropical addition and juxtaposition / ``*`` tropical multiplication,
so ``2e`` is ``2 * eps`` and ``3+1e`` is the dual number ``3 + 1 eps``.
Variables are ``x`` (one variable), ``x1 .. xk``, and ``y`` (the extra
coordinate appended by the embedding constructions, always last).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Sequence

from .arith import EPS, INF, ONE, DualValue, format_dual, tv
from .congruence import CongruencePair
from .poly import DualPolynomial

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>-?\d+(?:\.\d+)?(?:/\d+)?)"
    r"|(?P<inf>inf\b|oo|∞)"
    r"|(?P<var>x\d*|y)"
    r"|(?P<eps>e|ε)"
    r"|(?P<op>[+*^()~;,])"
    r")"
)


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text[:pos]}<HERE>{text[pos:]}")
        self.pos = pos


def tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    text_len = len(text)
    while pos < text_len:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected character", text, pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


def infer_variables(texts: Sequence[str]) -> list[str]:
    """Variable names in index order for the given expressions."""
    names = {tok for t in texts for kind, tok, _ in tokenize(t) if kind == "var"}
    has_y = "y" in names
    names.discard("y")
    if "x" in names and len(names) > 1:
        raise ValueError("cannot mix 'x' with indexed variables")
    if names == {"x"}:
        xs = ["x"]
    elif names:
        idx = sorted(int(n[1:]) for n in names)
        if idx[0] < 1:
            raise ValueError("variables are numbered from x1")
        xs = [f"x{i}" for i in range(1, idx[-1] + 1)]
    elif has_y:
        xs = []
    else:
        # constants are read as polynomials in one variable
        xs = ["x"]
    return xs + ["y"] if has_y else xs


def variable_names(k: int, embedded: bool = False) -> list[str]:
    """Default names: ``x`` or ``x1..xk``, plus a trailing ``y`` if ``embedded``."""
    base = k - 1 if embedded else k
    xs = ["x"] if base == 1 else [f"x{i}" for i in range(1, base + 1)]
    return xs + ["y"] if embedded else xs


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.names = list(names)
        self.k = len(self.names)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self, value: Optional[str] = None):
        kind, tok, pos = self.peek()
        if kind is None or (value is not None and tok != value):
            raise ParseError(f"expected {value or 'a token'}", self.text, pos)
        self.i += 1
        return kind, tok, pos

    def done(self) -> bool:
        return self.i >= len(self.toks)

    def expr(self) -> DualPolynomial:
        f = self.term()
        while self.peek()[1] == "+":
            self.take("+")
            f = f + self.term()
        return f

    def term(self) -> DualPolynomial:
        f = self.factor()
        while True:
            kind, tok, _ = self.peek()
            if tok == "*":
                self.take("*")
                f = f * self.factor()
            elif kind in ("num", "inf", "var", "eps") or tok == "(":
                f = f * self.factor()
            else:
                return f

    def factor(self) -> DualPolynomial:
        f = self.atom()
        if self.peek()[1] == "^":
            self.take("^")
            kind, tok, pos = self.take()
            if kind != "num" or not tok.isdigit():
                raise ParseError("exponent must be a nonnegative integer", self.text, pos)
            f = f ** int(tok)
        return f

    def atom(self) -> DualPolynomial:
        kind, tok, pos = self.take()
        if kind == "num":
            return DualPolynomial.constant(self.k, Fraction(tok))
        if kind == "inf":
            return DualPolynomial.zero(self.k)
        if kind == "eps":
            return DualPolynomial.constant(self.k, EPS)
        if kind == "var":
            if tok not in self.names:
                raise ParseError(f"unknown variable {tok!r}", self.text, pos)
            return DualPolynomial.var(self.k, self.names.index(tok))
        if tok == "(":
            f = self.expr()
            self.take(")")
            return f
        raise ParseError(f"unexpected {tok!r}", self.text, pos)


def parse_poly(text: str, names: Optional[Sequence[str]] = None, k: Optional[int] = None) -> DualPolynomial:
    if names is None:
        names = variable_names(k) if k is not None else infer_variables([text])
    p = _Parser(text, names)
    f = p.expr()
    if not p.done():
        raise ParseError("trailing input", text, p.peek()[2])
    return f


def parse_polys(text: str, names: Optional[Sequence[str]] = None, k: Optional[int] = None) -> list[DualPolynomial]:
    """A ``,`` or ``;`` separated generator list."""
    chunks = [c for c in re.split(r"[;,]", text) if c.strip()]
    if names is None:
        names = variable_names(k) if k is not None else infer_variables(chunks)
    return [parse_poly(c, names) for c in chunks]


def parse_dual(text: str) -> DualValue:
    f = parse_poly(text, [])
    return f.terms.get((), DualValue(INF, INF))


def parse_congruence(text: str, names: Optional[Sequence[str]] = None, k: Optional[int] = None) -> list[CongruencePair]:
    """``f ~ g; f' ~ g'; ...`` (newlines also separate relations)"""
    rels = [r for r in re.split(r"[;\n]", text) if r.strip()]
    sides = []
    for r in rels:
        parts = r.split("~")
        if len(parts) != 2:
            raise ParseError("expected exactly one '~' per relation", r, len(r))
        sides.append(parts)
    if names is None:
        names = variable_names(k) if k is not None else infer_variables([s for pair in sides for s in pair])
    return [CongruencePair(parse_poly(f, names), parse_poly(g, names)) for f, g in sides]


def parse_point(text: str | Sequence) -> tuple:
    items = text.split(",") if isinstance(text, str) else text
    return tuple(tv(x) for x in items)


# -- printing ---------------------------------------------------------------


def format_monomial(n: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(n, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_coeff(c: DualValue) -> str:
    s = format_dual(c)
    return f"({s})" if c.a != INF and c.b != INF else s


def format_poly(f: DualPolynomial, names: Optional[Sequence[str]] = None) -> str:
    if names is None:
        names = variable_names(f.k)
    if not f.terms:
        return "inf"
    out = []
    for n, c in f.terms.items():
        mono = format_monomial(n, names)
        if not mono:
            out.append(format_coeff(c))
        elif c == ONE:
            out.append(mono)
        else:
            out.append(f"{format_coeff(c)}*{mono}")
    return " + ".join(out)


def format_pair(p: CongruencePair, names: Optional[Sequence[str]] = None) -> str:
    return f"{format_poly(p.lhs, names)} ~ {format_poly(p.rhs, names)}"
