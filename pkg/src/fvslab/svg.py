"""Deterministic SVG drawings of plane digraphs and coatings."""

from __future__ import annotations

from typing import Iterable
from xml.sax.saxutils import escape

from .drawing import tutte_layout
from .plane import PlaneDigraph, sort_key

SIZE = 480
MARGIN = 30


def _scale(pos: dict) -> dict:
    if not pos:
        return {}
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    w = max(max(xs) - min(xs), 1e-9)
    hgt = max(max(ys) - min(ys), 1e-9)
    s = (SIZE - 2 * MARGIN) / max(w, hgt)
    return {v: (MARGIN + (x - min(xs)) * s, MARGIN + (max(ys) - y) * s) for v, (x, y) in pos.items()}


def dump_svg(G: PlaneDigraph, *, highlight_arcs: Iterable = (), labels: bool = True, coords: dict | None = None) -> str:
    """SVG text for ``G``; arcs in ``highlight_arcs`` are drawn dashed in a
    second colour (used for link arcs of coatings)."""
    pos = _scale(coords if coords is not None else tutte_layout(G))
    special = set(highlight_arcs)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        "<defs>",
        '<marker id="tip" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto">'
        '<path d="M0,0 L10,5 L0,10 z" fill="#333"/></marker>',
        '<marker id="tip2" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto">'
        '<path d="M0,0 L10,5 L0,10 z" fill="#1a8f3c"/></marker>',
        "</defs>",
    ]
    r = 5.0
    for a in sorted(G.arcs, key=sort_key):
        t, h = G.arcs[a]
        (x1, y1), (x2, y2) = pos[t], pos[h]
        dx, dy = x2 - x1, y2 - y1
        d = max((dx * dx + dy * dy) ** 0.5, 1e-9)
        x2s, y2s = x2 - dx / d * r, y2 - dy / d * r
        if a in special:
            style = 'stroke="#1a8f3c" stroke-dasharray="4 3" marker-end="url(#tip2)"'
        else:
            style = 'stroke="#333" marker-end="url(#tip)"'
        out.append(f'<line class="arc" x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2s:.2f}" y2="{y2s:.2f}" {style}/>')
    for v in G.vertices:
        x, y = pos[v]
        out.append(f'<circle class="node" cx="{x:.2f}" cy="{y:.2f}" r="{r}" fill="#fff" stroke="#000"/>')
        if labels:
            out.append(f'<text x="{x + 6:.2f}" y="{y - 6:.2f}" font-size="8">{escape(str(v))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def dump_coating_svg(C) -> str:
    link = [a for pair in C.link_arcs.values() for a in pair]
    return dump_svg(C.graph, highlight_arcs=link)
