"""Deterministic SVG chord diagrams and DOT graphs.

Limit points are small open circles on the unit circle, marked points are
ticks, arcs are straight chords, and aisle/coaisle/thick regions are
shaded paths bounded by circle arcs and chords.  Interval i occupies the
sector between the limit points a_i and a_{i+1}; offset k sits at the
fixed sigmoid position k/(1+|k|) inside its sector, so arbitrary offsets
fit.  The placement is cosmetic; output bytes are a pure function of the
input and the render spec.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .circle import Arc, CirclePoint, limit, next_interval
from .errors import ValidationError
from .tstructures import HI, LO, TStructure, coaisle_presentation, entry_kind

SVG, DOT, JSON = "svg", "dot", "json"


@dataclass(frozen=True)
class RenderSpec:
    format: str = SVG
    annotate: bool = False
    size: int = 480

    def __post_init__(self) -> None:
        if self.format not in (SVG, DOT, JSON):
            raise ValidationError(f"unsupported render format {self.format!r}")
        if self.size < 64:
            raise ValidationError("render size must be at least 64 pixels")


def _angle(p: CirclePoint, n: int) -> float:
    base = 2.0 * math.pi * (p.interval - 1) / n
    if p.is_limit:
        return base
    frac = 0.5 + 0.5 * p.offset / (1 + abs(p.offset))
    return base + 2.0 * math.pi / n * frac


def _fmt(v: float) -> str:
    return f"{v:.2f}"


class _Canvas:
    def __init__(self, spec: RenderSpec):
        self.size = spec.size
        self.c = spec.size / 2.0
        self.r = spec.size * 0.42
        self.parts: list[str] = []

    def xy(self, theta: float) -> tuple[float, float]:
        return (self.c + self.r * math.cos(theta), self.c - self.r * math.sin(theta))

    def add(self, s: str) -> None:
        self.parts.append(s)

    def finish(self) -> str:
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.size}" height="{self.size}" '
            f'viewBox="0 0 {self.size} {self.size}">\n'
        )
        circle = (
            f'<circle cx="{_fmt(self.c)}" cy="{_fmt(self.c)}" r="{_fmt(self.r)}" '
            f'fill="none" stroke="black" stroke-width="1"/>\n'
        )
        return head + circle + "".join(self.parts) + "</svg>\n"


def _region_path(canvas: _Canvas, pieces: list[tuple[float, float]]) -> str:
    """Shaded path alternating circle arcs (start->end anticlockwise) with
    chords to the next piece's start."""
    cmds = []
    x0, y0 = canvas.xy(pieces[0][0])
    cmds.append(f"M {_fmt(x0)} {_fmt(y0)}")
    for idx, (start, end) in enumerate(pieces):
        if idx > 0:
            sx, sy = canvas.xy(start)
            cmds.append(f"L {_fmt(sx)} {_fmt(sy)}")
        ex, ey = canvas.xy(end)
        sweep_span = (end - start) % (2.0 * math.pi)
        large = 1 if sweep_span > math.pi else 0
        cmds.append(f"A {_fmt(canvas.r)} {_fmt(canvas.r)} 0 {large} 0 {_fmt(ex)} {_fmt(ey)}")
    cmds.append("Z")
    return f'<path class="region" d="{" ".join(cmds)}" fill="#cccccc" stroke="none"/>\n'


def _draw_limits(canvas: _Canvas, n: int, annotate: bool) -> None:
    for i in range(1, n + 1):
        x, y = canvas.xy(_angle(limit(i), n))
        canvas.add(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.00" fill="white" stroke="black"/>\n')
        if annotate:
            lx = canvas.c + (x - canvas.c) * 1.12
            ly = canvas.c + (y - canvas.c) * 1.12
            canvas.add(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="12" text-anchor="middle">a{i}</text>\n')


def _draw_ticks(canvas: _Canvas, points, n: int, annotate: bool) -> None:
    seen = sorted({p for p in points if p.is_marked}, key=lambda p: (p.interval, p.offset))
    for p in seen:
        th = _angle(p, n)
        x1 = canvas.c + (canvas.r - 4) * math.cos(th)
        y1 = canvas.c - (canvas.r - 4) * math.sin(th)
        x2 = canvas.c + (canvas.r + 4) * math.cos(th)
        y2 = canvas.c - (canvas.r + 4) * math.sin(th)
        canvas.add(
            f'<line class="tick" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="black"/>\n'
        )
        if annotate:
            lx = canvas.c + (canvas.r + 14) * math.cos(th)
            ly = canvas.c - (canvas.r + 14) * math.sin(th)
            canvas.add(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="10" text-anchor="middle">{p}</text>\n')


def _draw_arcs(canvas: _Canvas, arcs, n: int) -> None:
    for a in sorted(arcs, key=Arc.key):
        x1, y1 = canvas.xy(_angle(a.lo, n))
        x2, y2 = canvas.xy(_angle(a.hi, n))
        canvas.add(
            f'<line class="arc" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="black" stroke-width="1.5"/>\n'
        )


def render_arcs_svg(n: int, arcs, spec: RenderSpec) -> str:
    canvas = _Canvas(spec)
    _draw_arcs(canvas, arcs, n)
    _draw_limits(canvas, n, spec.annotate)
    _draw_ticks(canvas, [p for a in arcs for p in a.endpoints], n, spec.annotate)
    return canvas.finish()


def _block_pieces_svg(canvas: _Canvas, n: int, pieces_by_block: list[list[tuple[float, float]]]) -> None:
    for pieces in pieces_by_block:
        if pieces:
            canvas.add(_region_path(canvas, pieces))


def render_thick_svg(n: int, blocks, spec: RenderSpec) -> str:
    """Shade the full intervals of every block."""
    canvas = _Canvas(spec)
    per_block = []
    for b in blocks:
        per_block.append([(_angle(limit(i), n), _angle(limit(next_interval(i, n)), n)) for i in sorted(b)])
    _block_pieces_svg(canvas, n, per_block)
    _draw_limits(canvas, n, spec.annotate)
    return canvas.finish()


def render_aisle_svg(ts: TStructure, spec: RenderSpec) -> str:
    """Shade the pieces (a_i, x_i] of every block, one path per block with
    a non-empty region."""
    n = ts.n
    canvas = _Canvas(spec)
    per_block = []
    decorated = []
    for b in ts.partition.blocks:
        pieces = []
        for i in b:
            x = ts.entry(i)
            kind = entry_kind(x, i, n)
            if kind == LO:
                continue
            pieces.append((_angle(limit(i), n), _angle(x, n)))
            if x.is_marked:
                decorated.append(x)
        per_block.append(pieces)
    _block_pieces_svg(canvas, n, per_block)
    _draw_limits(canvas, n, spec.annotate)
    _draw_ticks(canvas, decorated, n, spec.annotate)
    return canvas.finish()


def render_coaisle_svg(ts: TStructure, spec: RenderSpec) -> str:
    """Shade the pieces [y_i, a_{i+1}) of every Kreweras block."""
    n = ts.n
    pres = coaisle_presentation(ts)
    canvas = _Canvas(spec)
    per_block = []
    decorated = []
    for b in pres.partition.blocks:
        pieces = []
        for i in b:
            y = pres.bounds[i - 1]
            kind = entry_kind(y, i, n)
            if kind == HI:
                continue
            pieces.append((_angle(y, n), _angle(limit(next_interval(i, n)), n)))
            if y.is_marked:
                decorated.append(y)
        per_block.append(pieces)
    _block_pieces_svg(canvas, n, per_block)
    _draw_limits(canvas, n, spec.annotate)
    _draw_ticks(canvas, decorated, n, spec.annotate)
    return canvas.finish()
