"""Static SVG plots of regions in T^1 and T^2.

Pieces are clipped exactly (rational arithmetic) against the bounding box;
two-dimensional pieces are filled, lower-dimensional ones are drawn as thick
segments or dots. Points with infinite coordinates are drawn on a strip past
the right (first coordinate infinite) or top (second coordinate infinite)
edge of the box.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polyhedra import LinearConstraint, Polyhedron
from .region import Region

SIZE = 400
MARGIN = 40
STRIP = 24
FILL = "#9ecae1"
STROKE = "#08519c"


def parse_bbox(text: str) -> tuple:
    parts = [Fraction(p.strip()) for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError("bbox needs four numbers x0,y0,x1,y1")
    x0, y0, x1, y1 = parts
    if x0 >= x1 or y0 >= y1:
        raise ValueError("bbox must have x0 < x1 and y0 < y1")
    return x0, y0, x1, y1


def _clip(poly: list, h: LinearConstraint) -> list:
    """Clip a convex polygon (list of 2-D points) by the closed side of ``h``."""
    a, b = h.coeffs
    sides = [(a, b, h.rhs)]
    if h.rel == "eq":
        sides.append((-a, -b, -h.rhs))
    for a, b, r in sides:
        out = []
        n = len(poly)
        for i in range(n):
            p, q = poly[i], poly[(i + 1) % n]
            fp = a * p[0] + b * p[1] - r
            fq = a * q[0] + b * q[1] - r
            if fp <= 0:
                out.append(p)
            if (fp < 0 < fq) or (fq < 0 < fp):
                t = fp / (fp - fq)
                out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
        poly = []
        for pt in out:
            if pt not in poly:
                poly.append(pt)
        if not poly:
            break
    return poly


def clip_polygon(p: Polyhedron, bbox) -> list:
    x0, y0, x1, y1 = bbox
    poly = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    for h in p.constraints:
        poly = _clip(poly, h)
        if not poly:
            return []
    return poly


def clip_interval(p: Polyhedron, lo: Fraction, hi: Fraction):
    for h in p.constraints:
        (a,) = h.coeffs
        if a == 0:
            if not h.holds((Fraction(0),)):
                return None
            continue
        bound = h.rhs / a
        if h.rel == "eq":
            lo, hi = max(lo, bound), min(hi, bound)
        elif a > 0:
            hi = min(hi, bound)
        else:
            lo = max(lo, bound)
    return (lo, hi) if lo <= hi else None


def _area2(poly: list) -> Fraction:
    return sum(p[0] * q[1] - q[0] * p[1] for p, q in zip(poly, poly[1:] + poly[:1]))


def _f(x) -> str:
    return f"{float(x):.3f}"


class _Canvas:
    def __init__(self, bbox, k: int):
        self.x0, self.y0, self.x1, self.y1 = bbox
        self.k = k
        self.items: list[str] = []

    def px(self, x) -> float:
        return MARGIN + float((x - self.x0) / (self.x1 - self.x0)) * SIZE

    def py(self, y) -> float:
        return MARGIN + STRIP + float((self.y1 - y) / (self.y1 - self.y0)) * SIZE

    def inf_x(self) -> float:
        return MARGIN + SIZE + STRIP / 2

    def inf_y(self) -> float:
        return MARGIN + STRIP / 2

    def polygon(self, pts) -> None:
        coords = " ".join(f"{_f(x)},{_f(y)}" for x, y in pts)
        self.items.append(f'<polygon points="{coords}" fill="{FILL}" fill-opacity="0.6" stroke="{STROKE}" stroke-width="1"/>')

    def segment(self, a, b) -> None:
        self.items.append(
            f'<line x1="{_f(a[0])}" y1="{_f(a[1])}" x2="{_f(b[0])}" y2="{_f(b[1])}" '
            f'stroke="{STROKE}" stroke-width="4" stroke-linecap="round"/>'
        )

    def dot(self, p) -> None:
        self.items.append(f'<circle cx="{_f(p[0])}" cy="{_f(p[1])}" r="4" fill="{STROKE}"/>')

    def mark(self, iv, a, b) -> None:
        if iv[0] == iv[1]:
            self.dot(a)
        else:
            self.segment(a, b)

    def text(self, x, y, s: str, anchor: str = "middle") -> None:
        self.items.append(f'<text x="{_f(x)}" y="{_f(y)}" font-size="11" text-anchor="{anchor}">{s}</text>')

    def render(self) -> str:
        width = 2 * MARGIN + SIZE + STRIP
        height = 2 * MARGIN + SIZE + STRIP
        frame = (
            f'<rect x="{MARGIN}" y="{MARGIN + STRIP}" width="{SIZE}" height="{SIZE}" '
            f'fill="none" stroke="#888" stroke-width="1"/>'
        )
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">'
        )
        return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', frame, *self.items, "</svg>"]) + "\n"


def _draw_flat(canvas: _Canvas, pts: list) -> None:
    """A degenerate clipped polygon: a segment between its extreme points, or a dot."""
    if len(pts) == 1:
        canvas.dot(pts[0])
        return
    pts = sorted(set(pts))
    canvas.segment(pts[0], pts[-1])


def region_svg(region: Region, bbox: Sequence) -> str:
    """Deterministic SVG for a region with ``k <= 2``; ``bbox`` is ``(x0, y0, x1, y1)``."""
    if region.k > 2:
        raise ValueError(f"plots need k <= 2, got k={region.k}")
    bbox = tuple(Fraction(b) for b in bbox)
    c = _Canvas(bbox, region.k)
    x0, y0, x1, y1 = bbox
    if region.k == 1:
        mid = (y0 + y1) / 2
        c.items.append(
            f'<line x1="{_f(c.px(x0))}" y1="{_f(c.py(mid))}" x2="{_f(c.px(x1))}" y2="{_f(c.py(mid))}" stroke="#bbb"/>'
        )
        for p in region.pieces(()):
            iv = clip_interval(p, x0, x1)
            if iv is None:
                continue
            a, b = (c.px(iv[0]), c.py(mid)), (c.px(iv[1]), c.py(mid))
            c.mark(iv, a, b)
        if region.pieces({0}):
            c.dot((c.inf_x(), c.py(mid)))
        c.text(c.inf_x(), c.py(mid) - 10, "∞")
    else:
        for p in region.pieces(()):
            pts = clip_polygon(p, bbox)
            if not pts:
                continue
            if len(pts) >= 3 and _area2(pts) != 0:
                c.polygon([(c.px(x), c.py(y)) for x, y in pts])
            else:
                _draw_flat(c, [(c.px(x), c.py(y)) for x, y in pts])
        for p in region.pieces({0}):
            iv = clip_interval(p, y0, y1)
            if iv is not None:
                a, b = (c.inf_x(), c.py(iv[0])), (c.inf_x(), c.py(iv[1]))
                c.mark(iv, a, b)
        for p in region.pieces({1}):
            iv = clip_interval(p, x0, x1)
            if iv is not None:
                a, b = (c.px(iv[0]), c.inf_y()), (c.px(iv[1]), c.inf_y())
                c.mark(iv, a, b)
        if region.pieces({0, 1}):
            c.dot((c.inf_x(), c.inf_y()))
        c.text(c.inf_x(), MARGIN + STRIP + SIZE + 14, "x1=∞")
        c.text(MARGIN - 4, c.inf_y() + 4, "x2=∞", anchor="end")
    c.text(c.px(x0), MARGIN + STRIP + SIZE + 14, _f(x0))
    c.text(c.px(x1), MARGIN + STRIP + SIZE + 14, _f(x1))
    if region.k == 2:
        c.text(MARGIN - 4, c.py(y0), _f(y0), anchor="end")
        c.text(MARGIN - 4, c.py(y1), _f(y1), anchor="end")
    return c.render()
