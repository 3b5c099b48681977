"""Write SVG plots of the standard example regions into a directory.

    python scripts/make_figures.py [OUTDIR]
"""

import sys
from dataclasses import dataclass
from pathlib import Path

from tropdual.bend import bend_region, variety_region
from tropdual.congruence import congruence_region
from tropdual.constructions import naive_congruence_ideal
from tropdual.parse import parse_congruence, parse_poly, parse_polys
from tropdual.polyhedra import LinearConstraint, Polyhedron, is_empty
from tropdual.region import Region
from tropdual.svg import region_svg


@dataclass
class FigureConfig:
    outdir: Path = Path("figures")
    bbox: tuple = (-4, -4, 4, 4)


def slice_at_zero(region: Region) -> Region:
    """The part of an embedded region with last coordinate 0, as a set in the first k coordinates."""
    k = region.k - 1
    strata = {}
    for s, polys in region.strata.items():
        if k in s:
            continue
        dim = k - len(s)
        for p in polys:
            on_slice = Polyhedron(dim + 1, [*p.constraints, LinearConstraint((0,) * dim + (1,), 0, "eq")])
            if is_empty(on_slice):
                continue
            cons = [LinearConstraint(h.coeffs[:dim], h.rhs, h.rel) for h in p.constraints if any(h.coeffs[:dim])]
            strata.setdefault(s, []).append(Polyhedron(dim, cons))
    return Region(k, strata)


def figures() -> dict:
    quadrant = parse_congruence("x1 + x2 + 0 ~ 0")
    return {
        "filled_regions.svg": bend_region(parse_poly("x1*x2 + (0+0e)*x1 + (0+0e)*x2 + 1")),
        "classical_curve.svg": bend_region(parse_poly("x1*x2 + x1 + x2 + 1")),
        "unit_interval.svg": bend_region(parse_poly("(3+1e)*x^2 + (1+1e)*x + 2e")),
        "segment_in_plane.svg": variety_region(parse_polys("x1^2 + x1*x2 + x1 + 1, x2 + 0")),
        "quadrant.svg": congruence_region(quadrant),
        "quadrant_naive.svg": slice_at_zero(variety_region(naive_congruence_ideal(quadrant))),
        "box_complement.svg": bend_region(parse_poly("(x + (0+0e)*x + 0)*(x + (1+1e))")),
    }


def main(cfg: FigureConfig) -> None:
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    for name, region in figures().items():
        path = cfg.outdir / name
        path.write_text(region_svg(region, cfg.bbox), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main(FigureConfig(outdir=Path(sys.argv[1])) if len(sys.argv) > 1 else FigureConfig())
