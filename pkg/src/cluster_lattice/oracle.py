"""Brute-force closure engines on finite windows.

These are verification aids: the true closures (thick subcategories,
aisles) are infinite, so the rules run inside the window of arcs whose
endpoint offsets all lie in [-W, W].  Rule applications that would leave
the window are skipped and flagged, and comparisons against the exact
classification only assert agreement on an interior margin.

Rules: shifting an arc (both directions for thick closures, clockwise only
for aisle closures), and for every crossing pair already in the set, all
non-trivial chords on its four endpoints.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .circle import Arc, marked, validate_arc, validate_n
from .errors import ValidationError
from .thick import thick_contains, thick_generated
from .tstructures import aisle_contains, aisle_generated


@dataclass(frozen=True)
class Window:
    radius: int

    def __post_init__(self) -> None:
        if self.radius < 0:
            raise ValidationError("window radius must be >= 0")


@dataclass(frozen=True)
class ClosureReport:
    arcs: frozenset[Arc]
    saturated_at_boundary: bool


def window_arcs(n: int, radius: int) -> list[Arc]:
    """All arcs with every endpoint offset in [-radius, radius]."""
    validate_n(n)
    pts = [marked(i, k) for i in range(1, n + 1) for k in range(-radius, radius + 1)]
    out = []
    for p, q in combinations(pts, 2):
        if p.interval == q.interval and abs(p.offset - q.offset) <= 1:
            continue
        out.append(Arc(p, q))
    return out


def _encode(a: Arc, w: int, span: int) -> tuple[int, int]:
    i = (a.lo.interval - 1) * span + a.lo.offset + w
    j = (a.hi.interval - 1) * span + a.hi.offset + w
    return (i, j) if i < j else (j, i)


def _decode(e: tuple[int, int], w: int, span: int) -> Arc:
    lo = marked(e[0] // span + 1, e[0] % span - w)
    hi = marked(e[1] // span + 1, e[1] % span - w)
    return Arc(lo, hi)


def _trivial(a: int, b: int, span: int) -> bool:
    return a // span == b // span and b - a <= 1


def _closure(seeds: Iterable[Arc], n: int, w: int, deltas: tuple[int, ...]) -> ClosureReport:
    validate_n(n)
    span = 2 * w + 1
    enc = []
    for a in seeds:
        validate_arc(a, n)
        if abs(a.lo.offset) > w or abs(a.hi.offset) > w:
            raise ValidationError(f"seed arc {a} is outside the window of radius {w}")
        enc.append(_encode(a, w, span))
    saturated = False
    have: set[tuple[int, int]] = set()
    order: list[tuple[int, int]] = []
    queue = deque()
    for e in sorted(set(enc)):
        have.add(e)
        order.append(e)
        queue.append(e)

    def try_add(e: tuple[int, int]) -> None:
        if not _trivial(e[0], e[1], span) and e not in have:
            have.add(e)
            order.append(e)
            queue.append(e)

    while queue:
        a, b = queue.popleft()
        for d in deltas:
            ok = 0 <= a % span + d < span and 0 <= b % span + d < span
            if ok:
                try_add((a + d, b + d))
            else:
                saturated = True
        for idx in range(len(order)):  # pairs with later arcs are scanned when those pop
            c, dd = order[idx]
            # crossing test in the linear cut; chords stay inside the window
            if a < c < b < dd or c < a < dd < b:
                for x, y in combinations(sorted((a, b, c, dd)), 2):
                    try_add((x, y))
    arcs = frozenset(_decode(e, w, span) for e in have)
    return ClosureReport(arcs, saturated)


def window_thick_closure(seeds: Iterable[Arc], w: Window, n: int) -> ClosureReport:
    """Least fixpoint of both-direction shifts and crossing chords."""
    return _closure(seeds, n, w.radius, (-1, 1))


def window_aisle_closure(seeds: Iterable[Arc], w: Window, n: int) -> ClosureReport:
    """Least fixpoint of clockwise shifts and crossing chords."""
    return _closure(seeds, n, w.radius, (-1,))


@dataclass(frozen=True)
class OracleComparison:
    closure_in_classified: bool
    classified_in_closure: bool
    extra: tuple[Arc, ...]
    missing: tuple[Arc, ...]

    @property
    def agrees(self) -> bool:
        return self.closure_in_classified and self.classified_in_closure


def compare_with_classification(seeds: Iterable[Arc], w: Window, n: int, mode: str = "aisle") -> OracleComparison:
    """Two-sided agreement between the window closure and the classified
    object generated by the same seeds.

    The closure must be contained in the classified membership, and every
    member within the safety margin W-2 (boundary truncation can eat up to
    two offsets of context) must appear in the closure.
    """
    seeds = list(seeds)
    if mode == "aisle":
        report = window_aisle_closure(seeds, w, n)
        generated = aisle_generated(seeds, n)
        member = lambda a: aisle_contains(generated, a)
    elif mode == "thick":
        report = window_thick_closure(seeds, w, n)
        generated = thick_generated(seeds, n)
        member = lambda a: thick_contains(generated, a)
    else:
        raise ValidationError(f"unknown comparison mode {mode!r}")
    extra = tuple(sorted((a for a in report.arcs if not member(a)), key=Arc.key))
    margin = max(w.radius - 2, 0)
    missing = tuple(
        a for a in window_arcs(n, margin) if member(a) and a not in report.arcs
    )
    return OracleComparison(not extra, not missing, extra, missing)
