"""Thick subcategories, classified by non-exhaustive non-crossing partitions.

A partition block B names the arcs with both endpoints in the union of
the open intervals indexed by B; the assignment is a lattice isomorphism,
so order, meet and join transport verbatim from the partition side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circle import Arc, validate_arc, validate_n
from .noncrossing import Partition, _merge_crossing_blocks, join, leq, meet


@dataclass(frozen=True)
class ThickSubcat:
    partition: Partition

    @property
    def n(self) -> int:
        return self.partition.n

    def __str__(self) -> str:
        return f"<{self.partition}>"


def thick_contains(t: ThickSubcat, a: Arc) -> bool:
    """Both endpoint intervals must lie in a single block."""
    validate_arc(a, t.n)
    b = t.partition.block_of(a.lo.interval)
    return b is not None and a.hi.interval in b


def thick_generated(arcs, n: int) -> ThickSubcat:
    """Smallest thick subcategory containing the given arcs.

    Intervals hit by an endpoint are related whenever one arc connects
    them (each supported interval relates to itself); the transitive
    closure is coarsened by merging crossing blocks, since arcs spanning
    interleaved interval pairs force all four connecting chords.
    """
    validate_n(n)
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in arcs:
        validate_arc(a, n)
        i, j = a.lo.interval, a.hi.interval
        parent.setdefault(i, i)
        parent.setdefault(j, j)
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri
    classes: dict[int, list[int]] = {}
    for x in sorted(parent):
        classes.setdefault(find(x), []).append(x)
    blocks = _merge_crossing_blocks([tuple(sorted(c)) for c in classes.values()])
    return ThickSubcat(Partition(n, blocks))


def thick_leq(t1: ThickSubcat, t2: ThickSubcat) -> bool:
    return leq(t1.partition, t2.partition)


def thick_meet(t1: ThickSubcat, t2: ThickSubcat) -> ThickSubcat:
    return ThickSubcat(meet(t1.partition, t2.partition))


def thick_join(t1: ThickSubcat, t2: ThickSubcat) -> ThickSubcat:
    return ThickSubcat(join(t1.partition, t2.partition))
