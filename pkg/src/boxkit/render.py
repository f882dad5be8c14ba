"""Deterministic SVG drawings of 1- and 2-dimensional representations."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .geometry import BoxRepresentation

_PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
            "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def render_svg(g, rep: BoxRepresentation, unit: int = 40, margin: int = 20) -> str:
    """Rectangles (d=2) or stacked bars (d=1), one per vertex, with labels.

    Coordinates are ``unit`` pixels per step; every shape is widened by a
    few pixels so point intervals stay visible.
    """
    if rep.d > 2:
        raise ValueError("rendering supports d <= 2")
    n = rep.n
    names = [g.name_of(v) if g is not None else str(v) for v in range(n)]
    xs = [t for b in rep.boxes for t in (b[0].lo, b[0].hi)] or [0]
    x0, x1 = min(xs), max(xs)
    if rep.d == 2:
        ys = [t for b in rep.boxes for t in (b[1].lo, b[1].hi)] or [0]
        y1 = max(ys)
        height = (y1 - min(ys)) * unit
    else:
        height = n * unit // 2
    W, H = (x1 - x0) * unit + 2 * margin, height + 2 * margin
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
           f'viewBox="0 0 {W} {H}" font-family="monospace" font-size="11">',
           f'<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>']
    pad = max(unit // 8, 1)
    for v, box in enumerate(rep.boxes):
        colour = _PALETTE[v % len(_PALETTE)]
        # boxes grow by pad on each side so point intervals and touching boxes show
        x = margin + (box[0].lo - x0) * unit - pad
        w = (box[0].hi - box[0].lo) * unit + 2 * pad
        if rep.d == 2:
            y = margin + (y1 - box[1].hi) * unit - pad   # second axis points up
            h = (box[1].hi - box[1].lo) * unit + 2 * pad
        else:
            y = margin + v * unit // 2
            h = unit // 3
        out.append(f'<rect x="{x}" y="{y}" width="{w}" height="{h}" fill="{colour}" '
                   f'fill-opacity="0.25" stroke="{colour}" stroke-width="1.5"/>')
        out.append(f'<text x="{x + 3}" y="{y + 12}" fill="{colour}">{escape(names[v])}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
