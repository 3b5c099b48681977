"""``tropdual`` command line.

Exit codes: 0 success, 1 usage or parse error, 2 counterexample or failed
region check, 3 cover check gave up at its depth limit.

Arguments that start with ``-`` must be passed as ``--at=-1,1`` or after
``--``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import suites
from .arith import format_dual, format_trop, pi
from .bend import bend_region, variety_region
from .congruence import congruence_region
from .constructions import (
    Bounded,
    RayToInfinity,
    UnrepresentableRegion,
    as_halfspace,
    box_complement_ideal,
    box_complement_region,
    congruence_to_dual_ideal,
    congruence_to_ideal,
    convex_to_ideal,
    dual_ideal_to_classical,
    halfspace_congruence_to_ideal,
    horizontal_embed,
    naive_congruence_ideal,
    union_to_ideal,
)
from .parse import ParseError, format_poly, parse_congruence, parse_point, parse_poly, parse_polys, variable_names
from .polyhedra import CoverUndecided
from .poly import poly_eval
from .region import Region, region_union_all, symmetric_witness, to_json
from .svg import parse_bbox, region_svg

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _point_text(pt) -> str:
    return "(" + ", ".join(format_trop(x) for x in pt) + ")"


def _emit_region(region: Region, out) -> None:
    print("region:", file=out)
    print(json.dumps(to_json(region), indent=2, ensure_ascii=False), file=out)


def _emit_verdict(expected: Region, got: Region, out) -> bool:
    w = symmetric_witness(expected, got)
    print(f"region_equal: {'true' if w is None else 'false'}", file=out)
    if w is not None:
        side = "generators only" if w in got else "target only"
        print(f"witness: {_point_text(w)} ({side})", file=out)
    return w is None


def _emit_gens(gens, names, out) -> None:
    print("generators: " + ", ".join(format_poly(g, names) for g in gens), file=out)


# -- subcommands ------------------------------------------------------------


def cmd_eval(args, out) -> int:
    f = parse_poly(args.expr)
    point = parse_point(args.at)
    if len(point) != f.k:
        raise UsageError(f"point has {len(point)} coordinates but the polynomial has {f.k} variables")
    value = poly_eval(f, point)
    print(format_trop(pi(value)) if args.pi else format_dual(value), file=out)
    return EXIT_OK


def cmd_region(args, out) -> int:
    if args.kind == "bend":
        region = bend_region(parse_poly(args.text))
    elif args.kind == "variety":
        region = variety_region(parse_polys(args.text))
    else:
        region = congruence_region(parse_congruence(args.text))
    if args.svg is not None and region.k > 2:
        raise UsageError(f"--svg needs k <= 2, got k={region.k}")
    _emit_region(region, out)
    if args.svg is not None:
        Path(args.svg).write_text(region_svg(region, parse_bbox(args.bbox)), encoding="utf-8")
        print(f"svg: {args.svg}", file=out)
    return EXIT_OK


def _halfspaces(text: str):
    pairs = parse_congruence(text)
    hs = [as_halfspace(p) for p in pairs]
    bad = [str(p) for p, h in zip(pairs, hs) if h is None]
    if bad:
        raise UsageError(f"not of the form x^n + c x^m ~ c x^m: {'; '.join(bad)}")
    return pairs, hs


def parse_interval(text: str):
    t = text.strip().replace(" ", "")
    if not (t.startswith("(") and t[-1] in ")]"):
        raise UsageError(f"interval must look like (a,b) or (c,inf]: {text!r}")
    lo, _, hi = t[1:-1].partition(",")
    if hi in ("inf", "oo", "∞"):
        return RayToInfinity(Fraction(lo))
    if t[-1] == "]":
        raise UsageError(f"only the infinite end of an interval may be closed: {text!r}")
    return Bounded(Fraction(lo), Fraction(hi))


def cmd_construct(args, out) -> int:
    which = args.which
    texts = args.inputs
    if which != "box" and not texts:
        raise UsageError(f"construct {which} needs an input")
    ok = True
    if which in ("halfspace", "convex"):
        pairs, hs = _halfspaces(" ; ".join(texts))
        if which == "halfspace" and len(hs) != 1:
            raise UsageError("construct halfspace takes a single half-space relation")
        gens = halfspace_congruence_to_ideal(hs[0]) if which == "halfspace" else convex_to_ideal(hs)
        k = hs[0].k
        target = horizontal_embed(congruence_region(pairs))
        names = variable_names(k + 1, embedded=True)
    elif which == "union":
        parts, targets = [], []
        for t in texts:
            pairs, hs = _halfspaces(t)
            parts.append(convex_to_ideal(hs))
            targets.append(horizontal_embed(congruence_region(pairs)))
        k = targets[0].k - 1
        gens = union_to_ideal(parts)
        target = region_union_all(k + 1, targets)
        names = variable_names(k + 1, embedded=True)
    elif which in ("congruence", "dual"):
        pairs = parse_congruence(" ; ".join(texts))
        k = pairs[0].k
        region = congruence_region(pairs)
        if which == "dual":
            gens = _tolerant(congruence_to_dual_ideal, pairs)
            target, names = region, variable_names(k)
        else:
            gens = naive_congruence_ideal(pairs) if args.naive else _tolerant(congruence_to_ideal, pairs)
            target, names = horizontal_embed(region), variable_names(k + 1, embedded=True)
    elif which == "classical":
        polys = parse_polys(", ".join(texts))
        k = polys[0].k
        gens = _tolerant(dual_ideal_to_classical, polys)
        target = horizontal_embed(variety_region(polys))
        names = variable_names(k + 1, embedded=True)
    else:
        if not args.interval:
            raise UsageError("construct box needs --interval (one per coordinate)")
        box = [parse_interval(t) for t in args.interval]
        k = len(box)
        gens = box_complement_ideal(box)
        target = box_complement_region(box)
        names = variable_names(k)
        # the generators are combined by union: each one is its own ideal
        _emit_gens(gens, names, out)
        got = region_union_all(k, (bend_region(g) for g in gens))
        _emit_region(got, out)
        ok = _emit_verdict(target, got, out)
        return EXIT_OK if ok else EXIT_COUNTEREXAMPLE
    _emit_gens(gens, names, out)
    got = variety_region(gens, len(names))
    _emit_region(got, out)
    ok = _emit_verdict(target, got, out)
    if ok or args.naive:
        return EXIT_OK
    return EXIT_COUNTEREXAMPLE


def _tolerant(fn, data):
    """Run a construction without its built-in check; the caller prints the verdict."""
    return fn(data, check=False)


def cmd_verify(args, out) -> int:
    names = suites.VERIFY_GROUPS[args.suite]
    seed = args.seed
    if seed is None and os.environ.get("TROPDUAL_SEED"):
        seed = int(os.environ["TROPDUAL_SEED"])
    failed = False
    for name in names:
        kw = {}
        if seed is not None:
            kw["seed"] = seed
        if args.cases is not None and name != "box-complement":
            kw["cases"] = args.cases
        if args.boxes is not None and name == "box-complement":
            kw["boxes"] = args.boxes
        if name not in ("semiring", "halfspace", "dual-round-trip"):
            if args.grid_step is not None:
                kw["grid_step"] = Fraction(args.grid_step)
            if args.grid_range is not None:
                kw["grid_range"] = Fraction(args.grid_range)
        rep = suites.SUITES[name](**kw)
        print(rep.summary(), file=out)
        for what, witness in rep.failures:
            print(f"  counterexample: {what}" + (f" at {witness}" if witness is not None else ""), file=out)
        failed |= not rep.ok
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


# -- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropdual", description="Tropical dual numbers: evaluation, varieties, constructions.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a polynomial at a point")
    e.add_argument("expr")
    e.add_argument("--at", required=True, help="comma-separated coordinates, inf allowed")
    e.add_argument("--pi", action="store_true", help="print min(a, b) instead of a+be")
    e.set_defaults(func=cmd_eval)

    r = sub.add_parser("region", help="exact region of a bend locus, variety or congruence")
    r.add_argument("kind", choices=["bend", "variety", "congruence"])
    r.add_argument("text")
    r.add_argument("--svg", nargs="?", const="region.svg", default=None, metavar="FILE")
    r.add_argument("--bbox", default="-4,-4,4,4", help="x0,y0,x1,y1 for --svg")
    r.set_defaults(func=cmd_region)

    c = sub.add_parser("construct", help="congruence/ideal translations")
    c.add_argument("which", choices=["halfspace", "convex", "union", "congruence", "dual", "classical", "box"])
    c.add_argument("inputs", nargs="*")
    c.add_argument("--naive", action="store_true", help="congruence: apply the half-space recipe to the raw relations")
    c.add_argument("--interval", action="append", help="box: one interval per coordinate, (a,b) or (c,inf]")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run a randomized property suite")
    v.add_argument("suite", choices=sorted(suites.VERIFY_GROUPS))
    v.add_argument("--seed", type=int)
    v.add_argument("--cases", type=int)
    v.add_argument("--boxes", type=int)
    v.add_argument("--grid-step")
    v.add_argument("--grid-range")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    if hasattr(out, "reconfigure"):
        out.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnrepresentableRegion as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except CoverUndecided as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
