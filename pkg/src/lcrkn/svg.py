"""SVG rendering of a drawing. Display only: decimals produced here never feed back into predicates."""
from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from xml.sax.saxutils import escape

from .crossings import CrossingProfile, crossing_profile
from .geometry import PointSet

PALETTE = ("#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f")
HIGHLIGHT = "#d62728"


def _dec(v: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 9
        d = Decimal(v.numerator) / Decimal(v.denominator)
    s = format(d.normalize(), "f")
    return "0" if s in ("-0", "") else s


def emit_svg(P: PointSet, profile: CrossingProfile | None = None, parts: dict[int, str] | None = None,
             size: int = 800, margin: int = 40, title: str | None = None) -> str:
    """Points as labelled disks, edges as lines, edges carrying the most crossings in red.

    ``parts`` maps point ids to part names; points are coloured by part and a
    legend is added.
    """
    head = f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" width="{size}" height="{size}">'
    n = len(P)
    if n == 0:
        return head + "</svg>\n"
    if profile is None:
        profile = crossing_profile(P)

    xs = [p.x for p in P]
    ys = [p.y for p in P]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or Fraction(1)
    scale = Fraction(size - 2 * margin) / span
    x0, y1 = min(xs), max(ys)

    def pos(p):
        return _dec(margin + (p.x - x0) * scale), _dec(margin + (y1 - p.y) * scale)

    xy = [pos(p) for p in P]
    lcr = profile.lcr
    out = [head]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<g class="edges" stroke="#bbbbbb" stroke-width="0.5">')
    top = []
    for e, c in profile.counts.items():
        (xa, ya), (xb, yb) = xy[e.u], xy[e.v]
        line = f'<line x1="{xa}" y1="{ya}" x2="{xb}" y2="{yb}" data-crossings="{c}"/>'
        if lcr > 0 and c == lcr:
            top.append(line)
        else:
            out.append(line)
    out.append("</g>")
    out.append(f'<g class="max-edges" stroke="{HIGHLIGHT}" stroke-width="1.5">')
    out.extend(top)
    out.append("</g>")

    colour = {}
    if parts:
        for i in sorted(parts):
            colour.setdefault(parts[i], PALETTE[len(colour) % len(PALETTE)])
    out.append('<g class="points" font-family="sans-serif" font-size="10">')
    for p, (x, y) in zip(P, xy):
        fill = colour.get(parts.get(p.id), "#000000") if parts else "#000000"
        part = f' data-part="{escape(parts[p.id])}"' if parts and p.id in parts else ""
        out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="{fill}" data-id="{p.id}"{part}/>')
        out.append(f'<text x="{x}" y="{y}" dx="5" dy="-5">{p.id}</text>')
    out.append("</g>")
    if colour:
        out.append('<g class="legend" font-family="sans-serif" font-size="12">')
        for k, (name, fill) in enumerate(colour.items()):
            out.append(f'<text x="{size - margin}" y="{margin + 14 * k}" text-anchor="end" fill="{fill}">{escape(name)}</text>')
        out.append("</g>")
    out.append(f'<text x="{margin}" y="{size - margin // 3}" font-family="sans-serif" font-size="12">'
               f'n={n} lcr={lcr} crossings={profile.total}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
