"""SVG output for a laid-out diagram model."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import List, Optional, Sequence, Tuple

from .layout import LayoutResult, Vec2
from .void import DiagramModel, LinkEdge

SVG_NS = "http://www.w3.org/2000/svg"

DEFAULT_PALETTE = (
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3fa2", "#ffff99", "#b15928",
)

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
BIDIRECTIONAL_OFFSET = 4.0


@dataclass(frozen=True)
class Style:
    palette: Tuple[str, ...] = DEFAULT_PALETTE
    stroke: str = "#333333"
    stroke_width: float = 1.0
    edge_width: float = 1.5
    arrow_length: float = 8.0
    arrow_half_width: float = 3.0
    rim_gap: float = 2.0
    font_family: str = "sans-serif"
    label_color: str = "#000000"
    show_labels: bool = True

    def __post_init__(self) -> None:
        if not self.palette:
            raise ValueError("palette must not be empty")
        for name in ("stroke_width", "edge_width", "arrow_length", "arrow_half_width", "rim_gap"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class SvgDocument:
    text: str
    warnings: List[str] = field(default_factory=list)

    def __str__(self) -> str:
        return self.text


def escape_xml(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
        .replace("'", "&apos;")
    )


_XML_ILLEGAL = re.compile("[\x00-\x08\x0b\x0c\x0e-\x1f\ufffe\uffff]")


def xml_text(text: str) -> str:
    """Escape ``text`` and replace characters XML 1.0 cannot carry with U+FFFD."""
    return escape_xml(_XML_ILLEGAL.sub("\ufffd", text))


def format_coord(value: float) -> str:
    """Two decimals, half away from zero, never ``-0.00``.

    Rounds the shortest decimal representation of ``value`` so that 1.005
    becomes ``1.01`` as a reader would expect.
    """
    if not math.isfinite(value):
        raise ValueError(f"cannot format non-finite coordinate {value!r}")
    out = str(Decimal(repr(float(value))).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))
    return "0.00" if out == "-0.00" else out


def fnv1a64(data: bytes) -> int:
    h = FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def color_for(iri: str, palette: Sequence[str] = DEFAULT_PALETTE) -> str:
    return palette[fnv1a64(iri.encode("utf-8")) % len(palette)]


def trim_edge(
    c1: Vec2, r1: float, c2: Vec2, r2: float, gap: float, arrow_len: float
) -> Optional[Tuple[Vec2, Vec2]]:
    """Shorten the centre line so it starts at the source rim and stops before the arrowhead."""
    dx, dy = c2[0] - c1[0], c2[1] - c1[1]
    dist = math.hypot(dx, dy)
    if dist == 0.0 or dist <= r1 + r2 + 2 * gap + arrow_len:
        return None
    ux, uy = dx / dist, dy / dist
    start = Vec2(c1[0] + (r1 + gap) * ux, c1[1] + (r1 + gap) * uy)
    back = r2 + gap + arrow_len
    end = Vec2(c2[0] - back * ux, c2[1] - back * uy)
    return start, end


def font_size(radius: float) -> float:
    return max(8.0, min(16.0, 0.35 * radius))


def _edge_line(edge: LinkEdge, layout: LayoutResult, style: Style, offset: float) -> Optional[str]:
    c1, c2 = layout.positions[edge.source], layout.positions[edge.target]
    arrow = style.arrow_length if edge.directed else 0.0
    trimmed = trim_edge(c1, layout.radii[edge.source], c2, layout.radii[edge.target], style.rim_gap, arrow)
    if trimmed is None:
        return None
    (x1, y1), (x2, y2) = trimmed
    if offset:
        dx, dy = c2[0] - c1[0], c2[1] - c1[1]
        length = math.hypot(dx, dy)
        nx, ny = -dy / length * offset, dx / length * offset
        x1, y1, x2, y2 = x1 + nx, y1 + ny, x2 + nx, y2 + ny
    f = format_coord
    marker = ' marker-end="url(#arrow)"' if edge.directed else ""
    return (
        f'  <line x1="{f(x1)}" y1="{f(y1)}" x2="{f(x2)}" y2="{f(y2)}" '
        f'stroke="{style.stroke}" stroke-width="{f(style.edge_width)}"{marker}/>'
    )


def emit_svg(model: DiagramModel, layout: LayoutResult, style: Style = Style()) -> SvgDocument:
    missing = [n.iri for n in model.nodes if n.iri not in layout.positions]
    if missing:
        raise ValueError(f"layout has no position for {missing[0]}")
    f = format_coord
    width, height = f(layout.bounds.width), f(layout.bounds.height)
    arrow_len, half = style.arrow_length, style.arrow_half_width
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="{SVG_NS}" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        "  <defs>",
        f'    <marker id="arrow" markerWidth="{f(arrow_len)}" markerHeight="{f(2 * half)}" '
        f'refX="0.00" refY="{f(half)}" orient="auto" markerUnits="userSpaceOnUse">',
        f'      <path d="M0.00,0.00 L{f(arrow_len)},{f(half)} L0.00,{f(2 * half)} Z" fill="{style.stroke}"/>',
        "    </marker>",
        "  </defs>",
    ]

    pairs = {(e.source, e.target) for e in model.edges}
    omitted = []
    for edge in model.edges:
        both_ways = (edge.target, edge.source) in pairs
        line = _edge_line(edge, layout, style, BIDIRECTIONAL_OFFSET if both_ways else 0.0)
        if line is None:
            omitted.append(edge)
        else:
            lines.append(line)

    for node in model.nodes:
        (cx, cy), r = layout.positions[node.iri], layout.radii[node.iri]
        lines.append("  <g>")
        lines.append(
            f'    <circle cx="{f(cx)}" cy="{f(cy)}" r="{f(r)}" fill="{color_for(node.iri, style.palette)}" '
            f'stroke="{style.stroke}" stroke-width="{f(style.stroke_width)}"/>'
        )
        if style.show_labels:
            lines.append(
                f'    <text x="{f(cx)}" y="{f(cy)}" text-anchor="middle" dominant-baseline="central" '
                f'font-family="{escape_xml(style.font_family)}" font-size="{f(font_size(r))}" '
                f'fill="{style.label_color}">{xml_text(node.label)}</text>'
            )
        lines.append("  </g>")
    lines.append("</svg>")

    warnings = []
    if omitted:
        names = ", ".join(f"{e.source} -> {e.target}" for e in omitted)
        warnings.append(f"{len(omitted)} edge(s) omitted, circles too close to draw an arrow: {names}")
    return SvgDocument("\n".join(lines) + "\n", warnings)
