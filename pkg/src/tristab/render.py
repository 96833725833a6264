"""Orthographic SVG pictures of the spherical normal drawing.

The sphere is viewed down the +z axis; front-hemisphere geometry is drawn
solid, back-hemisphere geometry dashed and lighter. Arcs are minor great
circle arcs sampled as polylines. Output is deterministic for fixed input:
floats are formatted to fixed precision and no randomness is involved, so
identical drawings yield identical files.
"""

from __future__ import annotations

import math
from typing import Sequence

from .core import Ray
from .sphere import CrossingWitness

_BLUE = "#2563eb"
_RED = "#dc2626"
_GOLD = "#d97706"
_SAMPLES = 32


def _unit(ray: Ray) -> tuple:
    c = [float(v) for v in ray.ints]
    n = math.sqrt(sum(v * v for v in c))
    return tuple(v / n for v in c)


def _normalize(v: Sequence[float]):
    n = math.sqrt(sum(x * x for x in v))
    if n < 1e-12:
        return None
    return tuple(x / n for x in v)


def _arc_points(b: tuple, r: tuple) -> list:
    pts = []
    for k in range(_SAMPLES + 1):
        t = k / _SAMPLES
        p = _normalize([(1 - t) * x + t * y for x, y in zip(b, r)])
        if p is None:
            return []
        pts.append(p)
    return pts


class _Canvas:
    def __init__(self, size: int):
        self.size = size
        self.radius = size * 0.42
        self.center = size / 2

    def place(self, p: tuple) -> tuple:
        return (self.center + p[0] * self.radius,
                self.center - p[1] * self.radius)

    def fmt(self, xy: tuple) -> str:
        return f"{xy[0]:.2f},{xy[1]:.2f}"


def _polylines(canvas: _Canvas, pts: list, color: str, width: float) -> list:
    """One polyline per front/back run, back runs dashed and faded."""
    out = []
    run, front = [], None
    segments = []
    for p in pts:
        f = p[2] >= 0
        if front is None or f == front:
            run.append(p)
        else:
            segments.append((front, run + [p]))
            run = [p]
        front = f
    if run:
        segments.append((front, run))
    for f, seg in segments:
        if len(seg) < 2:
            continue
        coords = " ".join(canvas.fmt(canvas.place(p)) for p in seg)
        style = (f'stroke="{color}" stroke-width="{width:.2f}" fill="none" '
                 'stroke-linecap="round"')
        if not f:
            style += ' stroke-dasharray="4 5" opacity="0.45"'
        out.append(f'<polyline points="{coords}" {style}/>')
    return out


def sphere_svg(blue: Sequence[Ray], red: Sequence[Ray],
               highlight: CrossingWitness | None = None,
               size: int = 720) -> str:
    """Render blue and red rays with all blue-to-red arcs between them.

    Accepts any number of rays per color, so partial data still renders;
    antipodal pairs simply contribute no arc. A crossing highlight thickens
    its two arcs and marks the common ray.
    """
    canvas = _Canvas(size)
    blue_pts = [_unit(r) for r in blue]
    red_pts = [_unit(r) for r in red]
    hot = set()
    if highlight is not None:
        hot = {highlight.arc1.label, highlight.arc2.label}

    body = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
            f'height="{size}" viewBox="0 0 {size} {size}">',
            f'<rect width="{size}" height="{size}" fill="white"/>',
            f'<circle cx="{canvas.center}" cy="{canvas.center}" '
            f'r="{canvas.radius:.2f}" fill="none" stroke="#9ca3af" '
            'stroke-width="1.5"/>']

    plain, emphasized = [], []
    for i, b in enumerate(blue_pts):
        for j, r in enumerate(red_pts):
            pts = _arc_points(b, r)
            if not pts:
                continue
            if (i, j) in hot:
                emphasized += _polylines(canvas, pts, _GOLD, 7.0)
                emphasized += _polylines(canvas, pts, "#374151", 2.2)
            else:
                plain += _polylines(canvas, pts, "#6b7280", 1.3)
    body += plain + emphasized

    if highlight is not None and highlight.witness.eta is not None:
        x, y = canvas.place(_unit(highlight.witness.eta))
        body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="10" fill="none" '
                    f'stroke="{_GOLD}" stroke-width="3"/>')
        body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3.5" '
                    f'fill="{_GOLD}"/>')

    for pts, color, tag in ((blue_pts, _BLUE, "b"), (red_pts, _RED, "r")):
        for k, p in enumerate(pts):
            x, y = canvas.place(p)
            fill = color if p[2] >= 0 else "white"
            body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="6" '
                        f'fill="{fill}" stroke="{color}" stroke-width="2"/>')
            body.append(f'<text x="{x + 10:.2f}" y="{y - 8:.2f}" '
                        f'font-family="monospace" font-size="15" '
                        f'fill="{color}">{tag}{k}</text>')

    body.append("</svg>")
    return "\n".join(body) + "\n"
