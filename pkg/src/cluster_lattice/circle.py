"""Combinatorial model of a marked circle with finitely many limit points.

The circle carries ``n >= 2`` limit points ``a_1 < a_2 < ... < a_n`` in
anticlockwise order, and between consecutive limit points a copy of the
integers: ``Marked(i, k)`` is the marked point of the open interval
``(a_i, a_{i+1})`` at offset ``k``, with ``k`` increasing anticlockwise
and unbounded in both directions (every limit point is approached from
both sides by marked points).  This presentation is exact: all order
queries reduce to integer comparisons.

Points are serialised as ``a3`` (limit) and ``2:-4`` (marked); an arc of
two marked points as ``[1:0,2:3]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ValidationError


def validate_n(n: int) -> None:
    """The model needs at least two limit points; n = 1 is rejected."""
    if not isinstance(n, int) or n < 2:
        raise ValidationError(f"number of limit points must be an integer >= 2, got {n!r}")


def next_interval(i: int, n: int) -> int:
    return i % n + 1


def prev_interval(i: int, n: int) -> int:
    return (i - 2) % n + 1


@dataclass(frozen=True)
class ModelParams:
    """The single model parameter: the number n of limit points."""

    n: int

    def __post_init__(self) -> None:
        validate_n(self.n)


@dataclass(frozen=True)
class CirclePoint:
    """A point of the closed circle: ``offset is None`` encodes the limit
    point ``a_interval``, otherwise the marked point at that offset."""

    interval: int
    offset: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.interval, int) or self.interval < 1:
            raise ValidationError(f"interval index must be a positive integer, got {self.interval!r}")
        if self.offset is not None and not isinstance(self.offset, int):
            raise ValidationError(f"offset must be an integer or None, got {self.offset!r}")

    @property
    def is_limit(self) -> bool:
        return self.offset is None

    @property
    def is_marked(self) -> bool:
        return self.offset is not None

    def __str__(self) -> str:
        if self.offset is None:
            return f"a{self.interval}"
        return f"{self.interval}:{self.offset}"


def limit(i: int) -> CirclePoint:
    return CirclePoint(i, None)


def marked(i: int, k: int) -> CirclePoint:
    return CirclePoint(i, k)


_POINT_RE = re.compile(r"^(?:a(\d+)|(\d+):(-?\d+))$")


def parse_point(text: str) -> CirclePoint:
    m = _POINT_RE.match(text.strip())
    if m is None:
        raise ValidationError(f"cannot parse circle point {text!r} (expected 'a<i>' or '<i>:<k>')")
    if m.group(1) is not None:
        return limit(int(m.group(1)))
    return marked(int(m.group(2)), int(m.group(3)))


def format_point(p: CirclePoint) -> str:
    return str(p)


def validate_point(p: CirclePoint, n: int) -> None:
    if not 1 <= p.interval <= n:
        raise ValidationError(f"interval index {p.interval} out of range 1..{n}")


def linear_key(p: CirclePoint) -> tuple:
    """Total order on the circle cut at a_1.

    a_i sits below every marked point of interval i, which sit below
    a_{i+1}; within an interval the offsets order the points.
    """
    if p.is_limit:
        return (p.interval, 0, 0)
    return (p.interval, 1, p.offset)


def cyclic_lt3(x: CirclePoint, y: CirclePoint, z: CirclePoint) -> bool:
    """True iff x, y, z are pairwise distinct and anticlockwise in this order.

    Invariant under cyclic rotation of the arguments; false on repeats.
    """
    if x == y or y == z or x == z:
        return False
    kx, ky, kz = linear_key(x), linear_key(y), linear_key(z)
    return kx < ky < kz or ky < kz < kx or kz < kx < ky


def in_closed(p: CirclePoint, lo: CirclePoint, hi: CirclePoint) -> bool:
    """Membership of p in the cyclic closed interval [lo, hi]."""
    if lo == hi:
        return p == lo
    return p == lo or p == hi or cyclic_lt3(lo, p, hi)


def shift(p: CirclePoint, m: int) -> CirclePoint:
    """The m-th anticlockwise successor of a marked point (m may be negative).

    Limit points have no neighbours inside the marked set, so shifting one
    is an error.
    """
    if p.is_limit:
        raise ValidationError(f"cannot shift the limit point {p}")
    return marked(p.interval, p.offset + m)


class ZeroObject:
    """Marker for the zero object; trivial point pairs normalise to it."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"


ZERO = ZeroObject()


def is_trivial_pair(p: CirclePoint, q: CirclePoint) -> bool:
    """A pair {p, q} of marked points is trivial iff q is p or an immediate
    neighbour of p; such pairs name the zero object, not an arc."""
    return p.interval == q.interval and abs(p.offset - q.offset) <= 1


@dataclass(frozen=True)
class Arc:
    """An unordered pair of marked points, neither equal nor adjacent,
    stored with the smaller linear key first."""

    lo: CirclePoint
    hi: CirclePoint

    def __post_init__(self) -> None:
        if self.lo.is_limit or self.hi.is_limit:
            raise ValidationError("arc endpoints must be marked points")
        if is_trivial_pair(self.lo, self.hi):
            raise ValidationError(f"trivial pair {{{self.lo},{self.hi}}} is not an arc")
        if linear_key(self.lo) > linear_key(self.hi):
            lo, hi = self.hi, self.lo
            object.__setattr__(self, "lo", lo)
            object.__setattr__(self, "hi", hi)

    @property
    def endpoints(self) -> tuple[CirclePoint, CirclePoint]:
        return (self.lo, self.hi)

    def key(self) -> tuple:
        return (linear_key(self.lo), linear_key(self.hi))

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def make_arc(p: CirclePoint, q: CirclePoint):
    """Canonical arc on {p, q}, or ZERO when the pair is trivial."""
    if p.is_limit or q.is_limit:
        raise ValidationError("arc endpoints must be marked points")
    if is_trivial_pair(p, q):
        return ZERO
    return Arc(p, q)


def parse_arc(text: str) -> Arc:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValidationError(f"cannot parse arc {text!r} (expected '[p,q]')")
    parts = s[1:-1].split(",")
    if len(parts) != 2:
        raise ValidationError(f"cannot parse arc {text!r} (expected two endpoints)")
    p, q = parse_point(parts[0]), parse_point(parts[1])
    a = make_arc(p, q)
    if a is ZERO:
        raise ValidationError(f"{text!r} denotes a trivial pair, not an arc")
    return a


def format_arc(a: Arc) -> str:
    return str(a)


def validate_arc(a: Arc, n: int) -> None:
    validate_point(a.lo, n)
    validate_point(a.hi, n)


def shift_arc(a: Arc, m: int) -> Arc:
    return Arc(shift(a.lo, m), shift(a.hi, m))


def cross(a: Arc, b: Arc) -> bool:
    """True iff the endpoints of a and b strictly interleave on the circle.

    The linear cut at a_1 never passes through an endpoint (endpoints are
    marked, the cut point is a limit point), so interleaving can be read
    off the sorted linear keys.
    """
    if a.lo in b.endpoints or a.hi in b.endpoints:
        return False
    p0, p1 = linear_key(a.lo), linear_key(a.hi)
    q0, q1 = linear_key(b.lo), linear_key(b.hi)
    return p0 < q0 < p1 < q1 or q0 < p0 < q1 < p1


@dataclass(frozen=True)
class Region:
    """A cyclic interval of the closed circle with declared endpoint
    openness: (a,b), [a,b), (a,b] or [a,b]."""

    lower: CirclePoint
    upper: CirclePoint
    lower_open: bool = True
    upper_open: bool = True


def region_contains(r: Region, p: CirclePoint) -> bool:
    if r.lower == r.upper:
        # Degenerate: [a,a] is the point itself, every half-open or open
        # variant is empty.
        return p == r.lower and not r.lower_open and not r.upper_open
    if p == r.lower:
        return not r.lower_open
    if p == r.upper:
        return not r.upper_open
    return cyclic_lt3(r.lower, p, r.upper)
