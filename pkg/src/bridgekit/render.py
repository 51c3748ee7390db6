"""SVG pictures of bridge diagrams.

The loop is drawn as a horizontal line (closed up through the point at
infinity), marked points are spaced evenly in boundary order, the lower
arcs are thickened segments of the line, and chords are semicircles above
(upper hemisphere) or below (lower hemisphere) it.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .criterion import separating_family
from .diagram import LOWER, UPPER, ChordDiagram, Puncture

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
           "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f")
HIGHLIGHT = "#ffb000"


def _num(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def render(d: ChordDiagram, family: tuple[int, int, str] | None = None,
           spacing: float = 24.0, margin: float = 24.0) -> str:
    """Return the SVG text; ``family=(i, j, hemisphere)`` highlights that family."""
    size = d.size
    width = 2 * margin + spacing * max(size - 1, 1)
    half = spacing * (size - 1) / 2 + margin
    height = 2 * half
    base = half
    xs = [margin + spacing * i for i in range(size)]

    marked = set()
    if family is not None:
        fam = separating_family(d, *family)
        marked = {(family[2], c) for c, _ in fam.chords}

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num(width)}" '
        f'height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<line x1="0" y1="{_num(base)}" x2="{_num(width)}" y2="{_num(base)}" '
        'stroke="black" stroke-width="1"/>',
    ]
    for i in range(1, d.n + 1):
        a = xs[d.puncture_position(2 * i - 1)]
        b = xs[d.puncture_position(2 * i)]
        out.append(f'<line x1="{_num(a)}" y1="{_num(base)}" x2="{_num(b)}" y2="{_num(base)}" '
                   'stroke="black" stroke-width="4"/>')

    for hemi, sweep in ((UPPER, 1), (LOWER, 0)):
        for c in d.chords(hemi):
            a, b = xs[c[0]], xs[c[1]]
            r = (b - a) / 2
            label = d.chord_label(hemi, c)
            colour = PALETTE[(label - 1) % len(PALETTE)]
            if (hemi, c) in marked:
                out.append(f'<path d="M {_num(a)} {_num(base)} A {_num(r)} {_num(r)} 0 0 {sweep} '
                           f'{_num(b)} {_num(base)}" fill="none" stroke="{HIGHLIGHT}" '
                           'stroke-width="5" stroke-opacity="0.6"/>')
            out.append(f'<path d="M {_num(a)} {_num(base)} A {_num(r)} {_num(r)} 0 0 {sweep} '
                       f'{_num(b)} {_num(base)}" fill="none" stroke="{colour}" '
                       f'stroke-width="1.5" data-arc="{label}" data-hemisphere="{hemi}"/>')

    for x, p in zip(xs, d.boundary):
        if isinstance(p, Puncture):
            out.append(f'<circle cx="{_num(x)}" cy="{_num(base)}" r="3.5" fill="black"/>')
            out.append(f'<text x="{_num(x)}" y="{_num(base + 16)}" font-size="10" '
                       f'text-anchor="middle">{escape(f"q{p.index}")}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


__all__ = ["render"]
