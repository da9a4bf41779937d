"""Text and SVG pictures of planar images."""
from __future__ import annotations

from .lattice import DigitalImage


def _require_planar(X: DigitalImage) -> None:
    if X.dimension != 2:
        raise ValueError(f"rendering needs a 2-dimensional image, got dimension {X.dimension}")


def _extent(X: DigitalImage):
    xs = [p[0] for p in X.points]
    ys = [p[1] for p in X.points]
    return min(0, min(xs)), max(xs), min(0, min(ys)), max(ys)


def render_text(X: DigitalImage) -> str:
    """Character grid: ``#`` for points of X, ``.`` otherwise.

    The grid spans from the origin (or the least coordinate, if negative) to
    the greatest coordinate on each axis; the first coordinate runs left to
    right and the second bottom to top.
    """
    _require_planar(X)
    x0, x1, y0, y1 = _extent(X)
    rows = []
    for y in range(y1, y0 - 1, -1):
        rows.append("".join("#" if (x, y) in X else "." for x in range(x0, x1 + 1)))
    return "\n".join(rows) + "\n"


def render_svg(X: DigitalImage, cell: int = 40) -> str:
    _require_planar(X)
    x0, x1, y0, y1 = _extent(X)
    w = (x1 - x0 + 1) * cell
    h = (y1 - y0 + 1) * cell

    def center(p):
        return (p[0] - x0) * cell + cell // 2, (y1 - p[1]) * cell + cell // 2

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
           f'<rect width="{w}" height="{h}" fill="white"/>']
    for p, q in X.edges():
        (ax, ay), (bx, by) = center(X.points[p]), center(X.points[q])
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="gray" stroke-width="2"/>')
    for p in X.points:
        cx, cy = center(p)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{cell // 6}" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
