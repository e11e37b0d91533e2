"""Decorated non-crossing partitions as canonical names of t-structures.

A t-structure is named by an exhaustive non-crossing partition P of the
interval indices together with a decoration x_1..x_n marking how far the
aisle reaches into each interval: the aisle consists of the arcs with both
endpoints in the union of pieces (a_i, x_i] over a single block.  The
decoration entry x_i may be the lower limit point a_i only when i is a
singleton of P (empty piece), and the upper limit point a_{i+1} only when
i and i+1 share a block (full piece); otherwise it is a marked point of
interval i.

The coaisle is read off the Kreweras complement of P with bounds y_i just
below the decoration; the heart has one arc {x_i^{--}, x_i} per marked
decoration entry; approximation triangles come from a clockwise first-hit
walk over the decorated skeleton.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .circle import (
    Arc,
    CirclePoint,
    ZERO,
    cyclic_lt3,
    limit,
    linear_key,
    make_arc,
    marked,
    next_interval,
    shift,
    validate_arc,
    validate_n,
)
from .errors import ValidationError
from .noncrossing import Partition, _merge_crossing_blocks, kreweras, nc_enumerate
from .objects import APPROXIMATION, ArcObject, Triangle, arc_object

logger = logging.getLogger(__name__)

# Decoration entry kinds: the lower limit point, a marked point, the upper
# limit point.  Their tuple encodings sort in the interval order.
LO, MARKED, HI = 0, 1, 2


def singletons(p: Partition) -> frozenset[int]:
    return frozenset(b[0] for b in p.blocks if len(b) == 1)


def adjacencies(p: Partition) -> frozenset[int]:
    out = set()
    for b in p.blocks:
        bs = set(b)
        for i in b:
            if next_interval(i, p.n) in bs:
                out.add(i)
    return frozenset(out)


def entry_kind(x: CirclePoint, i: int, n: int) -> int:
    """Classify a decoration entry for interval i, validating its shape."""
    if x.is_marked:
        if x.interval != i:
            raise ValidationError(f"decoration entry {x} does not lie in interval {i}")
        return MARKED
    if x.interval == i:
        return LO
    if x.interval == next_interval(i, n):
        return HI
    raise ValidationError(f"decoration entry {x} is not an endpoint of interval {i}")


def entry_value(x: CirclePoint, i: int, n: int) -> tuple[int, int]:
    """Order key of a decoration entry within the closed interval i."""
    kind = entry_kind(x, i, n)
    return (kind, x.offset if kind == MARKED else 0)


def validate_decoration(p: Partition, x: tuple[CirclePoint, ...]) -> bool:
    """Compatibility of a decoration with an exhaustive non-crossing
    partition: lower limits only at singletons, upper limits only at
    adjacencies."""
    if not p.is_exhaustive:
        raise ValidationError("t-structures are named by exhaustive non-crossing partitions")
    if len(x) != p.n:
        raise ValidationError(f"decoration length {len(x)} does not match n = {p.n}")
    sing = singletons(p)
    adj = adjacencies(p)
    for i, xi in enumerate(x, start=1):
        kind = entry_kind(xi, i, p.n)
        if kind == LO and i not in sing:
            return False
        if kind == HI and i not in adj:
            return False
    return True


@dataclass(frozen=True)
class TStructure:
    """The canonical name (P, x) of a t-structure."""

    partition: Partition
    decoration: tuple[CirclePoint, ...]

    def __post_init__(self) -> None:
        validate_n(self.partition.n)
        object.__setattr__(self, "decoration", tuple(self.decoration))
        if not validate_decoration(self.partition, self.decoration):
            raise ValidationError(
                f"decoration ({', '.join(map(str, self.decoration))}) is not compatible with {self.partition}"
            )

    @property
    def n(self) -> int:
        return self.partition.n

    def entry(self, i: int) -> CirclePoint:
        return self.decoration[i - 1]

    def __str__(self) -> str:
        return f"({self.partition}; {', '.join(map(str, self.decoration))})"


@dataclass(frozen=True)
class CoaislePresentation:
    """Kreweras-side name of the coaisle: complement partition plus the
    bounds y_i opening the half-open pieces [y_i, a_{i+1})."""

    partition: Partition
    bounds: tuple[CirclePoint, ...]


@dataclass(frozen=True)
class EquivClass:
    """Shift-equivalence class of t-structures: the partition plus the set
    of indices whose decoration entry is a marked point."""

    partition: Partition
    z_indices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "z_indices", tuple(sorted(set(self.z_indices))))
        mandatory = set(range(1, self.partition.n + 1)) - singletons(self.partition) - adjacencies(self.partition)
        if not mandatory.issubset(self.z_indices):
            raise ValidationError("z-indices must contain every index that is neither a singleton nor an adjacency")


def _in_aisle_piece(ts: TStructure, p: CirclePoint) -> bool:
    xi = ts.entry(p.interval)
    kind = entry_kind(xi, p.interval, ts.n)
    if kind == LO:
        return False
    if kind == HI:
        return True
    return p.offset <= xi.offset


def aisle_contains(ts: TStructure, a: Arc) -> bool:
    """Both endpoints in pieces (a_i, x_i] of one block."""
    validate_arc(a, ts.n)
    if not (_in_aisle_piece(ts, a.lo) and _in_aisle_piece(ts, a.hi)):
        return False
    b = ts.partition.block_of(a.lo.interval)
    return a.hi.interval in b


@lru_cache(maxsize=8192)
def coaisle_presentation(ts: TStructure) -> CoaislePresentation:
    bounds = tuple(shift(x, -1) if x.is_marked else x for x in ts.decoration)
    return CoaislePresentation(kreweras(ts.partition), bounds)


def _in_coaisle_piece(pres: CoaislePresentation, p: CirclePoint, n: int) -> bool:
    yi = pres.bounds[p.interval - 1]
    kind = entry_kind(yi, p.interval, n)
    if kind == LO:
        return True
    if kind == HI:
        return False
    return p.offset >= yi.offset


def coaisle_contains(ts: TStructure, a: Arc) -> bool:
    """Both endpoints in pieces [y_i, a_{i+1}) of one Kreweras block."""
    validate_arc(a, ts.n)
    pres = coaisle_presentation(ts)
    if not (_in_coaisle_piece(pres, a.lo, ts.n) and _in_coaisle_piece(pres, a.hi, ts.n)):
        return False
    b = pres.partition.block_of(a.lo.interval)
    return a.hi.interval in b


def heart(ts: TStructure) -> list[Arc]:
    """One arc {x_i^{--}, x_i} per marked decoration entry, by interval."""
    return [Arc(shift(x, -2), x) for x in ts.decoration if x.is_marked]


def aisle_generated(arcs, n: int) -> TStructure:
    """Smallest t-structure whose aisle contains the given arcs.

    The decoration entry of interval i is the largest endpoint landing in
    it (the lower limit point when none does); the partition relates the
    endpoint intervals of each arc and is coarsened to non-crossing, with
    untouched intervals completing it as singletons.
    """
    validate_n(n)
    top: dict[int, int] = {}
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in arcs:
        validate_arc(a, n)
        for p in a.endpoints:
            cur = top.get(p.interval)
            if cur is None or p.offset > cur:
                top[p.interval] = p.offset
        i, j = a.lo.interval, a.hi.interval
        parent.setdefault(i, i)
        parent.setdefault(j, j)
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri
    classes: dict[int, list[int]] = {}
    for x in sorted(parent):
        classes.setdefault(find(x), []).append(x)
    blocks = list(_merge_crossing_blocks([tuple(sorted(c)) for c in classes.values()]))
    covered = {x for b in blocks for x in b}
    blocks.extend((i,) for i in range(1, n + 1) if i not in covered)
    decoration = tuple(marked(i, top[i]) if i in top else limit(i) for i in range(1, n + 1))
    return TStructure(Partition(n, tuple(blocks)), decoration)


def is_left_nondegenerate(ts: TStructure) -> bool:
    return all(entry_kind(x, i, ts.n) != HI for i, x in enumerate(ts.decoration, start=1))


def is_right_nondegenerate(ts: TStructure) -> bool:
    return all(entry_kind(x, i, ts.n) != LO for i, x in enumerate(ts.decoration, start=1))


def is_nondegenerate(ts: TStructure) -> bool:
    return all(x.is_marked for x in ts.decoration)


def is_bounded_above(ts: TStructure) -> bool:
    return len(ts.partition.blocks) == 1


def is_bounded_below(ts: TStructure) -> bool:
    return all(len(b) == 1 for b in ts.partition.blocks)


def equiv_class(ts: TStructure) -> EquivClass:
    return EquivClass(ts.partition, tuple(i for i, x in enumerate(ts.decoration, start=1) if x.is_marked))


def equiv_eq(ts1: TStructure, ts2: TStructure) -> bool:
    return equiv_class(ts1) == equiv_class(ts2)


def _piece_bound(ts: TStructure, i: int):
    """Upper offset of the marked part of piece (a_i, x_i]: None for an
    empty piece, an int for a marked bound, or the string 'all'."""
    x = ts.entry(i)
    kind = entry_kind(x, i, ts.n)
    if kind == LO:
        return None
    if kind == HI:
        return "all"
    return x.offset


def _piece_meets_open_interval(ts: TStructure, i: int, u: CirclePoint, v: CirclePoint) -> bool:
    """Whether piece (a_i, x_i] has a marked point strictly between u and v
    (cyclically, anticlockwise from u to v).  u and v are marked points."""
    bound = _piece_bound(ts, i)
    if bound is None:
        return False
    unbounded = bound == "all"
    if u.interval == i and v.interval == i:
        if u.offset < v.offset:
            lo = u.offset + 1
            return lo < v.offset and (unbounded or bound >= lo)
        # The interval wraps outside and re-enters: any point below v works.
        return True
    if u.interval == i:
        return unbounded or bound >= u.offset + 1
    if v.interval == i:
        return True
    # Neither endpoint lives in interval i, so the whole interval sits on
    # one side of the arc {u, v}.
    return cyclic_lt3(u, marked(i, 0), v)


def _block_crosses(ts: TStructure, block: tuple[int, ...], t: CirclePoint, tp: CirclePoint) -> bool:
    """Whether the block's region has marked points strictly on both sides
    of the arc {t, tp}; computed on the finite skeleton."""
    side1 = any(_piece_meets_open_interval(ts, i, t, tp) for i in block)
    if not side1:
        return False
    return any(_piece_meets_open_interval(ts, i, tp, t) for i in block)


def _first_hit(ts: TStructure, block: tuple[int, ...], u: CirclePoint) -> CirclePoint:
    """First point of the block's region when walking clockwise from u.

    If u itself lies in the region this is u; otherwise the walk always
    lands on a marked decoration entry (an upper-limit entry chains into
    the next interval of the same block, which carries marked points)."""
    if u.interval in block and _in_aisle_piece(ts, u):
        return u
    candidates = [x for i in block if (x := ts.entry(i)).is_marked]
    if not candidates:
        raise AssertionError(f"clockwise walk from {u} found no marked decoration entry in block {block}")
    ku = linear_key(u)
    below = [x for x in candidates if linear_key(x) < ku]
    pool = below if below else candidates
    return max(pool, key=linear_key)


def _rank_from(t: CirclePoint):
    """Sort key: anticlockwise position starting just above t (t is last)."""
    kt = linear_key(t)

    def rank(p: CirclePoint):
        kp = linear_key(p)
        return (0, kp) if kp > kt else (1, kp)

    return rank


def approx_triangle(ts: TStructure, t_arc: Arc) -> Triangle:
    """Approximation triangle Z -> T -> W with Z in the aisle and W in the
    coaisle.

    Every block whose region reaches strictly both sides of T contributes
    the arc between its two clockwise first hits; W chains the shifted
    hits with the endpoints of T.  Trivial contributions denote the zero
    object and are dropped.
    """
    validate_arc(t_arc, ts.n)
    t, tp = t_arc.lo, t_arc.hi
    crossing = [b for b in ts.partition.blocks if _block_crosses(ts, b, t, tp)]
    if not crossing:
        return Triangle(ArcObject(()), arc_object([t_arc]), arc_object([t_arc]), APPROXIMATION)
    pairs = [(_first_hit(ts, b, t), _first_hit(ts, b, tp)) for b in crossing]
    rank_t = _rank_from(t)
    pairs.sort(key=lambda zz: rank_t(zz[0]), reverse=True)
    zs = [z for z, _ in pairs]
    zps = [zp for _, zp in pairs]
    ranks = [rank_t(zp) for zp in zps]
    if ranks != sorted(ranks) or len(set(ranks)) != len(ranks):
        raise AssertionError("first hits from the two endpoints are not dually ordered")
    z_arcs = []
    for z, zp in pairs:
        a = make_arc(z, zp)
        if a is ZERO:
            logger.debug("trivial aisle contribution {%s,%s} for a crossing block; dropped", zp, z)
        else:
            z_arcs.append(a)
    w_arcs = [make_arc(t, shift(zs[0], -1))]
    for i in range(len(pairs) - 1):
        w_arcs.append(make_arc(shift(zps[i], -1), shift(zs[i + 1], -1)))
    w_arcs.append(make_arc(shift(zps[-1], -1), tp))
    return Triangle(arc_object(z_arcs), arc_object([t_arc]), arc_object(w_arcs), APPROXIMATION)


def decoration_options(p: Partition, i: int, lo: int, hi: int) -> list[CirclePoint]:
    """Window-bounded decoration entries for interval i: the allowed limit
    points plus the marked offsets lo..hi."""
    opts: list[CirclePoint] = []
    if i in singletons(p):
        opts.append(limit(i))
    opts.extend(marked(i, k) for k in range(lo, hi + 1))
    if i in adjacencies(p):
        opts.append(limit(next_interval(i, p.n)))
    return opts


def enumerate_decorations(p: Partition, lo: int = -2, hi: int = 2) -> Iterator[tuple[CirclePoint, ...]]:
    options = [decoration_options(p, i, lo, hi) for i in range(1, p.n + 1)]
    yield from product(*options)


def enumerate_tstructures(n: int, lo: int = -2, hi: int = 2) -> Iterator[TStructure]:
    """All (partition, decoration) names with offsets in the given window."""
    for p in nc_enumerate(n):
        for dec in enumerate_decorations(p, lo, hi):
            yield TStructure(p, dec)


def zero_aisle(n: int) -> TStructure:
    """Bottom t-structure: finest partition, all lower limits."""
    return aisle_generated((), n)


def full_aisle(n: int) -> TStructure:
    """Top t-structure: one block, all upper limits."""
    validate_n(n)
    p = Partition(n, (tuple(range(1, n + 1)),))
    return TStructure(p, tuple(limit(next_interval(i, n)) for i in range(1, n + 1)))
