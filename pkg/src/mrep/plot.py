"""Standalone SVG rendering of a 2-D polytope."""
from __future__ import annotations

import math
from typing import Sequence

from .representations import Vector

FILL = "#9ecae1"
STROKE = "#08519c"
AXIS = "#777777"
SIZE = 400


def angular_order(verts: Sequence[Vector]) -> list[Vector]:
    """Vertices sorted by angle around their centroid."""
    n = len(verts)
    cx = sum(v[0] for v in verts) / n
    cy = sum(v[1] for v in verts) / n
    return sorted(verts, key=lambda v: math.atan2(float(v[1] - cy), float(v[0] - cx)))


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def polygon_svg(verts: Sequence[Vector]) -> str:
    """SVG document with the filled hull polygon and the coordinate axes.

    Exact coordinates become floats here and nowhere else.
    """
    ordered = angular_order(verts)
    xs = [float(v[0]) for v in ordered]
    ys = [float(v[1]) for v in ordered]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    pad_x = 0.1 * (x1 - x0) or 1.0
    pad_y = 0.1 * (y1 - y0) or 1.0
    x0, x1, y0, y1 = x0 - pad_x, x1 + pad_x, y0 - pad_y, y1 + pad_y
    w, h = x1 - x0, y1 - y0
    stroke = _fmt(0.005 * max(w, h))
    # flip y so that the drawing uses mathematical orientation
    view = f"{_fmt(x0)} {_fmt(-y1)} {_fmt(w)} {_fmt(h)}"
    pts = " ".join(f"{_fmt(x)},{_fmt(-y)}" for x, y in zip(xs, ys))
    ax_y = min(max(0.0, y0), y1)
    ax_x = min(max(0.0, x0), x1)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="{view}">',
        f'  <line class="axis" x1="{_fmt(x0)}" y1="{_fmt(-ax_y)}" x2="{_fmt(x1)}" y2="{_fmt(-ax_y)}" stroke="{AXIS}" stroke-width="{stroke}"/>',
        f'  <line class="axis" x1="{_fmt(ax_x)}" y1="{_fmt(-y0)}" x2="{_fmt(ax_x)}" y2="{_fmt(-y1)}" stroke="{AXIS}" stroke-width="{stroke}"/>',
        f'  <polygon points="{pts}" fill="{FILL}" fill-opacity="0.7" stroke="{STROKE}" stroke-width="{stroke}"/>',
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
