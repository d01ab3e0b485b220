"""Text and SVG drawings of interval representations.

Rows are sorted by (lo, hi, label); columns scale linearly with the value so
touching endpoints land in the same column.  Open ends render as round
brackets (ASCII) or hollow dots (SVG).
"""

from __future__ import annotations

from fractions import Fraction

from .representation import Representation


def _scale(rep: Representation, width: int):
    los = [iv.lo for iv in rep.values()]
    his = [iv.hi for iv in rep.values()]
    lo, hi = min(los), max(his)
    span = hi - lo if hi > lo else Fraction(1)

    def col(v) -> int:
        return int(round(float((v - lo) / span * width)))

    return col


def render_ascii(rep: Representation, width: int = 60) -> str:
    if not rep:
        return ""
    col = _scale(rep, width)
    rows = sorted(rep.items(), key=lambda kv: (kv[1].lo, kv[1].hi, kv[0]))
    label_w = max(len(v) for v in rep)
    lines = []
    for v, iv in rows:
        a, z = col(iv.lo), col(iv.hi)
        if z <= a:
            z = a + 1
        lb = "[" if iv.left_closed else "("
        rb = "]" if iv.right_closed else ")"
        bar = " " * a + lb + "=" * max(z - a - 1, 0) + rb
        lines.append(f"{v.ljust(label_w)} {bar}")
    return "\n".join(lines) + "\n"


def render_svg(rep: Representation, width: int = 600, row_height: int = 22) -> str:
    rows = sorted(rep.items(), key=lambda kv: (kv[1].lo, kv[1].hi, kv[0]))
    col = _scale(rep, width) if rep else (lambda v: 0)
    pad = 80
    height = row_height * (len(rows) + 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width + 2 * pad}" '
        f'height="{height}" viewBox="0 0 {width + 2 * pad} {height}">'
    ]
    for k, (v, iv) in enumerate(rows):
        y = row_height * (k + 1)
        x1, x2 = pad + col(iv.lo), pad + col(iv.hi)
        if x2 <= x1:
            x2 = x1 + 2
        parts.append(
            f'<line x1="{x1}" y1="{y}" x2="{x2}" y2="{y}" stroke="black" stroke-width="2"/>'
        )
        for x, closed in ((x1, iv.left_closed), (x2, iv.right_closed)):
            fill = "black" if closed else "white"
            parts.append(
                f'<circle cx="{x}" cy="{y}" r="4" fill="{fill}" stroke="black"/>'
            )
        parts.append(
            f'<text x="{x2 + 10}" y="{y + 4}" font-size="12" font-family="monospace">{v}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
