"""Arc multisets, Hom dimensions and the two triangle constructions.

Objects are finite multisets of arcs (the empty multiset is the zero
object).  Hom spaces between arcs are at most one-dimensional: an arc X
maps nontrivially to Y exactly when X crosses the anticlockwise shift of
Y.  Two triangle constructions are provided and recorded as certificates:

* the extension triangle of a crossing pair, whose middle term consists
  of the two connecting chords on the four endpoints;
* the zig-zag cone of one arc against a family of mutually non-crossing
  arcs that all cross it, whose middle term walks the endpoints
  alternately.

Trivial chords (adjacent or equal endpoints) denote the zero object and
are dropped from middle terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .circle import (
    ZERO,
    Arc,
    CirclePoint,
    cross,
    cyclic_lt3,
    in_closed,
    linear_key,
    make_arc,
    shift,
    shift_arc,
)
from .errors import NoNonzeroMorphism, NotCrossing, PreconditionViolated

EXTENSION = "Extension"
ZIGZAG = "ZigZag"
APPROXIMATION = "Approximation"


@dataclass(frozen=True)
class ArcObject:
    """A finite multiset of arcs, canonically sorted."""

    summands: tuple[Arc, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "summands", tuple(sorted(self.summands, key=Arc.key)))

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def endpoint_multiset(self) -> tuple[CirclePoint, ...]:
        pts = [p for a in self.summands for p in a.endpoints]
        return tuple(sorted(pts, key=linear_key))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(str(a) for a in self.summands)


def arc_object(items: Iterable) -> ArcObject:
    """Build an ArcObject, silently dropping ZERO entries."""
    return ArcObject(tuple(a for a in items if a is not ZERO))


ZERO_OBJECT = ArcObject(())


@dataclass(frozen=True)
class Triangle:
    """Certificate of a distinguished triangle first -> middle -> last ->
    suspension of first, produced by one of the implemented constructions."""

    first: ArcObject
    middle: ArcObject
    last: ArcObject
    construction: str

    def __post_init__(self) -> None:
        if self.construction not in (EXTENSION, ZIGZAG, APPROXIMATION):
            raise PreconditionViolated(f"unknown triangle construction {self.construction!r}")

    def __str__(self) -> str:
        return f"{self.first} -> {self.middle} -> {self.last} [{self.construction}]"


def suspend(obj: ArcObject, m: int = 1) -> ArcObject:
    """m-th power of the suspension: every endpoint offset drops by m."""
    return ArcObject(tuple(shift_arc(a, -m) for a in obj.summands))


def suspend_arc(a: Arc, m: int = 1) -> Arc:
    return shift_arc(a, -m)


def hom_dim(x: Arc, y: Arc) -> int:
    """dim Hom(x, y): 1 iff x crosses the anticlockwise shift of y."""
    return 1 if cross(x, shift_arc(y, 1)) else 0


def _cyclic_chain(points: list[CirclePoint]) -> bool:
    """True iff the points are pairwise distinct and anticlockwise in the
    listed order (indices cyclic)."""
    m = len(points)
    if len(set(points)) != m:
        return False
    return all(cyclic_lt3(points[i], points[(i + 1) % m], points[(i + 2) % m]) for i in range(m))


def factors_through(x: Arc, y: Arc, s: Arc) -> bool:
    """Whether the nonzero morphism x -> y factors through the arc s.

    Requires the crossing configuration y0 < y0'^+ < y1 < y1'^+ for some
    labelling of the endpoints; factorisation holds iff s has one endpoint
    in [y0, y0'] and the other in [y1, y1'].
    """
    labelling = None
    for y0, y1 in ((x.lo, x.hi), (x.hi, x.lo)):
        for yp0, yp1 in ((y.lo, y.hi), (y.hi, y.lo)):
            if _cyclic_chain([y0, shift(yp0, 1), y1, shift(yp1, 1)]):
                labelling = (y0, y1, yp0, yp1)
                break
        if labelling:
            break
    if labelling is None:
        raise NoNonzeroMorphism(f"no nonzero morphism from {x} to {y}")
    y0, y1, yp0, yp1 = labelling
    for s0, s1 in ((s.lo, s.hi), (s.hi, s.lo)):
        if in_closed(s0, y0, yp0) and in_closed(s1, y1, yp1):
            return True
    return False


def cocone_of_crossing(yp: Arc, y: Arc) -> Triangle:
    """Extension triangle yp -> X + Z -> y of a crossing pair.

    With the labelling y0 < y0' < y1 < y1' the middle term consists of the
    chords {y0, y0'} and {y1, y1'}; trivial chords are dropped.
    """
    if not cross(y, yp):
        raise NotCrossing(f"{y} and {yp} do not cross")
    y0, y1 = y.lo, y.hi
    if cyclic_lt3(y0, yp.lo, y1):
        yp0, yp1 = yp.lo, yp.hi
    else:
        yp0, yp1 = yp.hi, yp.lo
    middle = arc_object([make_arc(y0, yp0), make_arc(y1, yp1)])
    return Triangle(arc_object([yp]), middle, arc_object([y]), EXTENSION)


def zigzag_cone(x: Arc, ys: Iterable[Arc]) -> Triangle:
    """Zig-zag cone x -> C -> sum(ys) for mutually non-crossing ys that all
    cross x.

    After relabelling so that x < y'_1 < ... < y'_m < x' < y_m < ... < y_1,
    the middle term is the chain of chords {x, y_1}, {y'_1, y_2}, ...,
    {y'_{m-1}, y_m}, {y'_m, x'} with trivial links dropped.
    """
    ys = list(ys)
    if not ys:
        raise PreconditionViolated("zig-zag cone needs at least one arc crossing x")
    if len(set(ys)) != len(ys):
        raise PreconditionViolated("duplicate arcs in ys")
    for a in ys:
        if not cross(x, a):
            raise PreconditionViolated(f"{a} does not cross {x}")
    for i in range(len(ys)):
        for j in range(i + 1, len(ys)):
            if cross(ys[i], ys[j]):
                raise PreconditionViolated(f"{ys[i]} and {ys[j]} cross")
    lo, hi = x.lo, x.hi
    labelled = []
    for a in ys:
        if cyclic_lt3(lo, a.lo, hi):
            labelled.append((a.lo, a.hi))
        else:
            labelled.append((a.hi, a.lo))
    # The primed endpoints live in the cyclic interval (lo, hi), which never
    # wraps the linear cut because lo is the canonically smaller endpoint.
    labelled.sort(key=lambda pr: linear_key(pr[0]))
    primed = [pr[0] for pr in labelled]
    unprimed = [pr[1] for pr in labelled]
    chain = [lo] + primed + [hi] + list(reversed(unprimed))
    if not _cyclic_chain(chain):
        raise PreconditionViolated("arcs share endpoints; the zig-zag labelling is not strict")
    pieces = [make_arc(lo, unprimed[0])]
    for j in range(1, len(labelled)):
        pieces.append(make_arc(primed[j - 1], unprimed[j]))
    pieces.append(make_arc(primed[-1], hi))
    return Triangle(arc_object([x]), arc_object(pieces), arc_object(ys), ZIGZAG)
