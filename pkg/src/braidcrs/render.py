"""
SVG pictures of standard multicurves in the punctured disk.

Punctures sit on a horizontal axis at x = 1..n; each curve [a, b] is an ellipse
around punctures a..b whose padding shrinks with nesting depth, so nested
curves are drawn strictly inside one another. Output is byte-for-byte
deterministic.
"""

from __future__ import annotations

from typing import Iterable

from .curves import StandardCurve

UNIT = 60.0
MARGIN = 20.0
HEIGHT = 70.0
SHRINK = 0.75


def nesting_depths(curves: Iterable[StandardCurve]) -> dict[StandardCurve, int]:
    """Depth 1 for curves directly inside the boundary, +1 per enclosing curve."""
    cs = list(curves)
    return {c: 1 + sum(1 for o in cs if o.contains(c)) for c in cs}


def _ellipse(cx: float, cy: float, rx: float, ry: float, style: str) -> str:
    return (f'<ellipse cx="{cx:.2f}" cy="{cy:.2f}" rx="{rx:.2f}" ry="{ry:.2f}" '
            f'{style}/>')


def render_multicurve_svg(curves: Iterable[StandardCurve], n: int) -> str:
    cs = sorted(curves)
    depths = nesting_depths(cs)
    width = (n + 1) * UNIT + 2 * MARGIN
    height = 2 * HEIGHT + 2 * MARGIN
    cy = height / 2

    def x(p: float) -> float:
        return MARGIN + p * UNIT

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        _ellipse(x((n + 1) / 2), cy, (n + 1) / 2 * UNIT - 0.05 * UNIT, HEIGHT,
                 'fill="none" stroke="black" stroke-width="2"'),
    ]
    for c in cs:
        d = depths[c]
        pad = 0.45 * SHRINK ** d
        rx = ((c.b - c.a) / 2 + pad) * UNIT
        ry = HEIGHT * SHRINK ** d
        lines.append(_ellipse(x((c.a + c.b) / 2), cy, rx, ry,
                              f'fill="none" stroke="#1f4e9a" stroke-width="1.5" '
                              f'data-curve="{c}" data-depth="{d}"'))
    for p in range(1, n + 1):
        lines.append(f'<circle cx="{x(p):.2f}" cy="{cy:.2f}" r="4" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
