"""Plain SVG output for point sets and vector fans.

Output is a deterministic string (fixed number formatting, no timestamps) so
figures can be diffed. The y-axis is flipped to the usual math orientation.
"""
from __future__ import annotations

from typing import List, Optional

import numpy as np

from .sequences import PointSet, Role, VectorSequence
from .verification import hull_indices

HULL_COLOR = "#1f4e9c"
INNER_COLOR = "#c0392b"


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _frame(xmin, ymin, xmax, ymax, scale, margin):
    w = (xmax - xmin) * scale + 2 * margin
    h = (ymax - ymin) * scale + 2 * margin

    def tx(x):
        return _fmt((x - xmin) * scale + margin)

    def ty(y):
        return _fmt((ymax - y) * scale + margin)

    return _fmt(w), _fmt(h), tx, ty


def svg_point_set(P: PointSet, scale: float = 20.0, radius: Optional[float] = None, title: str = "") -> str:
    """Hull polygon, hull vertices (filled) and inner points (hollow)."""
    pts = P.points
    if P.labels is None and len(pts) >= 3:
        labels = np.full(len(pts), Role.INNER, dtype=np.int8)
        labels[hull_indices(pts)] = Role.HULL
    else:
        labels = P.labels if P.labels is not None else np.full(len(pts), Role.UNLABELED)
    xmin, ymin = pts.min(axis=0).tolist()
    xmax, ymax = pts.max(axis=0).tolist()
    r = radius if radius is not None else max(1.0, min(4.0, scale / 4))
    margin = 2 * r + 2
    w, h, tx, ty = _frame(xmin, ymin, xmax, ymax, scale, margin)

    out: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">'
    ]
    if title:
        out.append(f"  <title>{title}</title>")
    if len(pts) >= 3:
        hull = hull_indices(pts)
        poly = " ".join(f"{tx(x)},{ty(y)}" for x, y in pts[hull].tolist())
        out.append(f'  <polygon points="{poly}" fill="none" stroke="{HULL_COLOR}" stroke-width="1"/>')
    for (x, y), lab in zip(pts.tolist(), labels.tolist()):
        if lab == Role.INNER:
            out.append(
                f'  <circle class="inner" cx="{tx(x)}" cy="{ty(y)}" r="{_fmt(r)}" '
                f'fill="white" stroke="{INNER_COLOR}" stroke-width="1"/>'
            )
        else:
            out.append(f'  <circle class="hull" cx="{tx(x)}" cy="{ty(y)}" r="{_fmt(r)}" fill="{HULL_COLOR}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def svg_vectors(V: VectorSequence, scale: float = 20.0, title: str = "") -> str:
    """Each vector drawn as a segment from the origin."""
    v = V.vectors
    xmin, ymin = np.minimum(v.min(axis=0), 0).tolist()
    xmax, ymax = np.maximum(v.max(axis=0), 0).tolist()
    margin = 4.0
    w, h, tx, ty = _frame(xmin, ymin, xmax, ymax, scale, margin)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">']
    if title:
        out.append(f"  <title>{title}</title>")
    ox, oy = tx(0), ty(0)
    for x, y in v.tolist():
        out.append(f'  <line x1="{ox}" y1="{oy}" x2="{tx(x)}" y2="{ty(y)}" stroke="{HULL_COLOR}" stroke-width="0.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
