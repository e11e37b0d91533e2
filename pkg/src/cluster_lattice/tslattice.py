"""The lattice of t-structures under inclusion of aisles.

Inclusion of aisles is partition refinement together with the componentwise
order of decorations inside each closed interval; meet and join are the
partition meet/join decorated with the componentwise min/max.  The meet is
also the intersection of aisles, which `meet_is_intersection_check`
verifies on sampled arcs.  Shift-equivalence classes inherit the lattice
structure through representatives, and the classes of non-degenerate
t-structures form a copy of the non-crossing partition lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .circle import Arc, limit, marked, next_interval
from .errors import GuardExceeded, ValidationError
from .noncrossing import Partition, join, leq, meet, nc_enumerate
from .tstructures import (
    EquivClass,
    TStructure,
    adjacencies,
    aisle_contains,
    entry_value,
    equiv_class,
    is_bounded_above,
    is_bounded_below,
    singletons,
)

HASSE_GUARD = 10_000
EQUIV_GUARD = 8


def _same_n(s: TStructure, t: TStructure) -> int:
    if s.n != t.n:
        raise ValidationError(f"t-structure size mismatch: {s.n} != {t.n}")
    return s.n


def ts_leq(s: TStructure, t: TStructure) -> bool:
    """Aisle inclusion: partition refinement plus componentwise decorations."""
    n = _same_n(s, t)
    if not leq(s.partition, t.partition):
        return False
    return all(
        entry_value(s.entry(i), i, n) <= entry_value(t.entry(i), i, n) for i in range(1, n + 1)
    )


def _componentwise(s: TStructure, t: TStructure, pick_larger: bool) -> tuple:
    n = s.n
    out = []
    for i in range(1, n + 1):
        a, b = s.entry(i), t.entry(i)
        if (entry_value(a, i, n) <= entry_value(b, i, n)) != pick_larger:
            out.append(a)
        else:
            out.append(b)
    return tuple(out)


def ts_meet(s: TStructure, t: TStructure) -> TStructure:
    """Partition meet with the componentwise decoration minimum; the result
    is automatically a compatible pair."""
    _same_n(s, t)
    return TStructure(meet(s.partition, t.partition), _componentwise(s, t, pick_larger=False))


def ts_join(s: TStructure, t: TStructure) -> TStructure:
    """Partition join with the componentwise decoration maximum."""
    _same_n(s, t)
    return TStructure(join(s.partition, t.partition), _componentwise(s, t, pick_larger=True))


def meet_is_intersection_check(s: TStructure, t: TStructure, samples: Iterable[Arc]) -> list[Arc]:
    """Arcs where membership in the meet differs from the conjunction of
    memberships; expected empty."""
    _same_n(s, t)
    m = ts_meet(s, t)
    bad = []
    for a in samples:
        if aisle_contains(m, a) != (aisle_contains(s, a) and aisle_contains(t, a)):
            bad.append(a)
    return bad


def class_representative(c: EquivClass) -> TStructure:
    """Canonical representative: offset 0 at marked indices, the forced
    limit point elsewhere."""
    p = c.partition
    sing = singletons(p)
    z = set(c.z_indices)
    dec = []
    for i in range(1, p.n + 1):
        if i in z:
            dec.append(marked(i, 0))
        elif i in sing:
            dec.append(limit(i))
        else:
            dec.append(limit(next_interval(i, p.n)))
    return TStructure(p, tuple(dec))


def class_meet(c1: EquivClass, c2: EquivClass) -> EquivClass:
    return equiv_class(ts_meet(class_representative(c1), class_representative(c2)))


def class_join(c1: EquivClass, c2: EquivClass) -> EquivClass:
    return equiv_class(ts_join(class_representative(c1), class_representative(c2)))


def class_leq(c1: EquivClass, c2: EquivClass) -> bool:
    return class_meet(c1, c2) == c1


@dataclass(frozen=True)
class EquivLattice:
    """The finite lattice of shift-equivalence classes for a given n."""

    n: int
    classes: tuple[EquivClass, ...]

    def top(self) -> EquivClass:
        tops = [c for c in self.classes if all(class_leq(d, c) for d in self.classes)]
        if len(tops) != 1:
            raise AssertionError("equivalence-class lattice has no unique top")
        return tops[0]

    def bottom(self) -> EquivClass:
        bots = [c for c in self.classes if all(class_leq(c, d) for d in self.classes)]
        if len(bots) != 1:
            raise AssertionError("equivalence-class lattice has no unique bottom")
        return bots[0]


def equiv_lattice(n: int) -> EquivLattice:
    """All equivalence classes (P, Z): Z ranges over supersets of the
    indices that are neither singletons nor adjacencies of P."""
    if n > EQUIV_GUARD:
        raise GuardExceeded(f"equivalence-class guard exceeded: n = {n} > {EQUIV_GUARD}")
    classes = []
    for p in nc_enumerate(n):
        optional = sorted(singletons(p) | adjacencies(p))
        mandatory = tuple(sorted(set(range(1, n + 1)) - set(optional)))
        for r in range(len(optional) + 1):
            for extra in combinations(optional, r):
                classes.append(EquivClass(p, mandatory + extra))
    return EquivLattice(n, tuple(classes))


def nondeg_equiv_iso_check(n: int) -> bool:
    """The classes of non-degenerate t-structures, ordered as above, form a
    lattice isomorphic to NC_n under refinement; the top consists of the
    bounded-above t-structures and the bottom of the bounded-below ones."""
    partitions = list(nc_enumerate(n))
    classes = {p: EquivClass(p, tuple(range(1, n + 1))) for p in partitions}
    for p, q in combinations(partitions, 2):
        for a, b in ((p, q), (q, p)):
            if class_leq(classes[a], classes[b]) != leq(a, b):
                return False
    top = max(partitions, key=lambda p: sum(leq(q, p) for q in partitions))
    bottom = min(partitions, key=lambda p: sum(leq(q, p) for q in partitions))
    if not all(leq(q, top) for q in partitions):
        return False
    if not all(leq(bottom, q) for q in partitions):
        return False
    return is_bounded_above(class_representative(classes[top])) and is_bounded_below(
        class_representative(classes[bottom])
    )


@dataclass(frozen=True)
class HasseGraph:
    """Covering-relation digraph of a finite poset (edges point upward)."""

    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    def to_dot(self) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;"]
        for i, lab in enumerate(self.labels):
            lines.append(f'  n{i} [label="{lab}"];')
        for u, v in self.edges:
            lines.append(f"  n{u} -> n{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {"nodes": list(self.labels), "edges": [list(e) for e in self.edges]}


def hasse_export(elements: Sequence, leq_fn: Callable | None = None) -> HasseGraph:
    """Transitive reduction of the order on the given elements.

    Elements are partitions (refinement order) or t-structures (aisle
    inclusion) unless an explicit comparison is supplied.
    """
    elements = list(elements)
    if len(elements) > HASSE_GUARD:
        raise GuardExceeded(f"hasse guard exceeded: {len(elements)} > {HASSE_GUARD}")
    if leq_fn is None:
        if elements and isinstance(elements[0], TStructure):
            leq_fn = ts_leq
        else:
            leq_fn = leq
    m = len(elements)
    down = [0] * m
    up = [0] * m
    for i in range(m):
        for j in range(m):
            if leq_fn(elements[j], elements[i]):
                down[i] |= 1 << j
                up[j] |= 1 << i
    edges = []
    for u in range(m):
        for v in range(m):
            if u != v and (down[v] >> u) & 1:
                if down[v] & up[u] == (1 << u) | (1 << v):
                    edges.append((u, v))
    return HasseGraph(tuple(str(e) for e in elements), tuple(edges))
