"""SVG rendering of labeled lattice graphs with optional pattern highlighting.

Blocks are drawn pointy-top with y growing downward.  Block (i, j) has
center (sqrt(3)*R*(j - i/2), 1.5*R*i); each vertex sits on a fixed corner
offset of its home block, which makes shared corners of adjacent blocks
coincide exactly and reproduces the cube-stack look of the tiling.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional

from .graph import FiniteGraph
from .lattice import VClass, VertexAddr

_FILL = {VClass.W: "#f2f2f2", VClass.U: "#4878cf", VClass.V: "#f5b942"}


def vertex_position(addr: VertexAddr, scale: float) -> tuple[float, float]:
    cx = math.sqrt(3.0) * scale * (addr.j - addr.i / 2.0)
    cy = 1.5 * scale * addr.i
    if addr.cls == VClass.W:
        return cx, cy - scale
    if addr.cls == VClass.U:
        return cx + math.sqrt(3.0) * scale / 2.0, cy - scale / 2.0
    return cx, cy


def render_svg(
    g: FiniteGraph,
    highlight: Optional[Iterable[int]] = None,
    scale: float = 30.0,
) -> str:
    """Render to an SVG string with one circle glyph per vertex."""
    if g.labels is None:
        raise ValueError("rendering needs lattice labels")
    highlight = frozenset(highlight or ())
    pos = [vertex_position(lab, scale) for lab in g.labels]
    xs = [p[0] for p in pos]
    ys = [p[1] for p in pos]
    pad = 1.5 * scale
    x0, y0 = min(xs) - pad, min(ys) - pad
    width = max(xs) - min(xs) + 2 * pad
    height = max(ys) - min(ys) + 2 * pad

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0:.2f} {y0:.2f} '
        f'{width:.2f} {height:.2f}">',
        '<g stroke="#555555" stroke-width="1.5">',
    ]
    for a, b in g.edges():
        (xa, ya), (xb, yb) = pos[a], pos[b]
        parts.append(f'<line x1="{xa:.2f}" y1="{ya:.2f}" x2="{xb:.2f}" y2="{yb:.2f}"/>')
    parts.append("</g>")
    parts.append('<g stroke="#222222" stroke-width="1">')
    for k, lab in enumerate(g.labels):
        x, y = pos[k]
        if k in highlight:
            radius, fill = 0.30 * scale, "#d43a3a"
        else:
            radius, fill = 0.18 * scale, _FILL[lab.cls]
        parts.append(
            f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{radius:.2f}" fill="{fill}">'
            f"<title>{lab}</title></circle>"
        )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
