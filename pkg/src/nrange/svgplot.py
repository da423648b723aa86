"""Minimal deterministic SVG emission for regions; no plotting dependency.

Fixed 800x800 viewbox with axes scaled to 1.1 times the outer radius; every
coordinate is formatted with six decimals so identical inputs give identical
bytes.
"""

from __future__ import annotations

import numpy as np

from .geometry import (
    Annulus,
    Circle,
    ConvexBoundary,
    Disc,
    Ellipse,
    Empty,
    Point,
    Region,
    Segment,
)

__all__ = ["render_regions"]

_SIZE = 800.0
_HALF = _SIZE / 2.0


def _fmt(v: float) -> str:
    out = f"{v:.6f}"
    return "0.000000" if out == "-0.000000" else out


class _Canvas:
    def __init__(self, outer_radius: float):
        self.scale = _HALF / (1.1 * max(outer_radius, 1e-12))
        self.parts: list[str] = []

    def px(self, z: complex) -> tuple[float, float]:
        return _HALF + z.real * self.scale, _HALF - z.imag * self.scale

    def line(self, za: complex, zb: complex, style: str) -> None:
        xa, ya = self.px(za)
        xb, yb = self.px(zb)
        self.parts.append(
            f'<line x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xb)}" y2="{_fmt(yb)}" {style}/>'
        )

    def circle(self, centre: complex, radius: float, style: str) -> None:
        cx, cy = self.px(centre)
        self.parts.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius * self.scale)}" '
            f'fill="none" {style}/>'
        )

    def polyline(self, zs, style: str, close: bool = True) -> None:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (self.px(z) for z in zs))
        tag = "polygon" if close else "polyline"
        self.parts.append(f'<{tag} points="{coords}" fill="none" {style}/>')

    def marker(self, z: complex, style: str, size: float = 6.0) -> None:
        x, y = self.px(z)
        self.parts.append(
            f'<path d="M {_fmt(x - size)} {_fmt(y)} L {_fmt(x + size)} {_fmt(y)} '
            f'M {_fmt(x)} {_fmt(y - size)} L {_fmt(x)} {_fmt(y + size)}" {style}/>'
        )

    def text(self, x: float, y: float, content: str) -> None:
        self.parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-family="monospace" '
            f'font-size="14">{content}</text>'
        )


def _ellipse_samples(region: Ellipse, count: int = 256) -> np.ndarray:
    centre = (region.focus1 + region.focus2) / 2.0
    half_major = region.major_axis_length / 2.0
    foc = abs(region.focus2 - region.focus1) / 2.0
    half_minor = float(np.sqrt(max(half_major**2 - foc**2, 0.0)))
    axis = np.angle(region.focus2 - region.focus1) if region.focus1 != region.focus2 else 0.0
    t = np.linspace(0.0, 2.0 * np.pi, count, endpoint=False)
    return centre + np.exp(1j * axis) * (half_major * np.cos(t) + 1j * half_minor * np.sin(t))


def _draw_region(canvas: _Canvas, region: Region, style: str) -> None:
    match region:
        case Empty():
            pass
        case Point(z):
            canvas.marker(z, style, size=4.0)
        case Segment(a, b):
            canvas.line(a, b, style)
        case Disc(c, r) | Circle(c, r):
            canvas.circle(c, r, style)
        case Annulus(c, lo, hi):
            canvas.circle(c, hi, style)
            canvas.circle(c, lo, style)
        case Ellipse() as ell:
            canvas.polyline(_ellipse_samples(ell), style)
        case ConvexBoundary(curve):
            canvas.polyline(curve.points, style)
        case _:
            raise TypeError(f"not a region: {region!r}")


def render_regions(
    items,
    outer_radius: float,
    annotations=(),
    markers=(),
) -> str:
    """Render ``(region, style)`` pairs to an SVG document string.

    ``annotations`` are text lines placed top-left; ``markers`` are
    ``(complex, style)`` cross marks.  Output bytes depend only on the
    arguments.
    """
    canvas = _Canvas(outer_radius)
    axis_style = 'stroke="#888888" stroke-width="1"'
    reach = 1.1 * max(outer_radius, 1e-12)
    canvas.line(complex(-reach, 0.0), complex(reach, 0.0), axis_style)
    canvas.line(complex(0.0, -reach), complex(0.0, reach), axis_style)
    for region, style in items:
        _draw_region(canvas, region, style)
    for z, style in markers:
        canvas.marker(z, style)
    for row, content in enumerate(annotations):
        canvas.text(10.0, 20.0 + 18.0 * row, content)
    body = "\n".join(canvas.parts)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(_SIZE)}" '
        f'height="{int(_SIZE)}" viewBox="0 0 {int(_SIZE)} {int(_SIZE)}">\n'
        f'<rect width="{int(_SIZE)}" height="{int(_SIZE)}" fill="white"/>\n'
        f"{body}\n</svg>\n"
    )
