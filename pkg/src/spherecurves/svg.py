"""Static SVG rendering of a curve projected onto a coordinate plane."""
from __future__ import annotations

from typing import Iterable, Optional, Sequence
from xml.sax.saxutils import escape

import numpy as np

PLANES = {"xy": (0, 1), "xz": (0, 2), "yz": (1, 2)}
SIZE = 480
PAD = 1.1


def _fmt(x: float) -> str:
    # fixed precision keeps files byte-stable; -0 is folded to 0
    text = f"{x:.6f}"
    return "0.000000" if text == "-0.000000" else text


def project(points: Iterable[Sequence[float]], plane: str = "xy") -> np.ndarray:
    """Orthographic projection, dropping the coordinate normal to ``plane``."""
    i, j = PLANES[plane]
    pts = np.asarray(list(points), dtype=float)
    return pts[:, [i, j]]


def render_projection(points: Iterable[Sequence[float]], plane: str = "xy",
                      title: Optional[str] = None) -> str:
    """SVG document with the unit-circle silhouette and the projected polyline.

    Drawing coordinates are sphere coordinates with the vertical axis
    flipped, so the silhouette is the circle of radius 1 about the origin.
    """
    xy = project(points, plane)
    axes = plane[0], plane[1]
    coords = " ".join(f"{_fmt(x)},{_fmt(-y)}" for x, y in xy)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="{-PAD} {-PAD} {2 * PAD} {2 * PAD}">',
    ]
    if title:
        lines.append(f"  <title>{escape(title)}</title>")
    lines += [
        '  <circle class="silhouette" cx="0" cy="0" r="1" fill="none" stroke="#999999" stroke-width="0.004"/>',
        f'  <line class="axis" x1="-1" y1="0" x2="1" y2="0" stroke="#dddddd" stroke-width="0.003"/>',
        f'  <line class="axis" x1="0" y1="-1" x2="0" y2="1" stroke="#dddddd" stroke-width="0.003"/>',
        f'  <text x="1.02" y="0.03" font-size="0.06">{axes[0]}</text>',
        f'  <text x="0.02" y="-1.02" font-size="0.06">{axes[1]}</text>',
        f'  <polyline class="curve" fill="none" stroke="#1f4e9c" stroke-width="0.008" points="{coords}"/>',
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
