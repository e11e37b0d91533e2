"""Non-crossing and non-exhaustive non-crossing partitions of [n].

A non-exhaustive non-crossing partition (NNC) is a collection of disjoint
non-empty blocks of [n] = {1, ..., n}, not necessarily covering [n], such
that no two blocks interleave: there are no i < k < j < l with i, j in one
block and k, l in another.  Exhaustive ones (covering [n]) are the classical
non-crossing partitions NC_n, counted by the Catalan numbers; the NNC count
is the binomial transform sum_k binom(n,k) * C_k.

NNC_n is a lattice under refinement.  The meet is blockwise intersection.
The join completes both arguments by singletons, takes the non-crossing
join (transitive closure, then merging of crossing blocks to a fixpoint)
and discards singletons supported by neither argument.  The Kreweras
complement provides the self-duality of NC_n used by the join cross-check:
K(P) is the maximal non-crossing partition of the primed positions in the
interleaved cycle 1 < 1' < 2 < 2' < ... < n < n' that is compatible with P
on the unprimed positions; applying K twice rotates P once clockwise.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterator

from .errors import GuardExceeded, ValidationError

DEFAULT_GUARD_N = 12


def _enumeration_guard() -> int:
    raw = os.environ.get("CLUSTER_LATTICE_GUARD_N")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValidationError(f"CLUSTER_LATTICE_GUARD_N must be an integer, got {raw!r}")
    return DEFAULT_GUARD_N


def _blocks_interleave(b1: tuple[int, ...], b2: tuple[int, ...]) -> bool:
    """Linear crossing test for two disjoint sorted blocks: true iff the
    merged tag sequence alternates at least as 1,2,1,2."""
    merged = sorted([(x, 0) for x in b1] + [(x, 1) for x in b2])
    runs = 0
    last = -1
    for _, tag in merged:
        if tag != last:
            runs += 1
            last = tag
    return runs >= 4


@dataclass(frozen=True)
class Partition:
    """A non-exhaustive non-crossing partition in canonical form: every
    block sorted ascending, blocks sorted by their minimum."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"partition ground set size must be >= 1, got {self.n!r}")
        raw = [tuple(sorted(b)) for b in self.blocks]
        if any(not b for b in raw):
            raise ValidationError("blocks must be non-empty")
        canon = tuple(sorted(raw, key=lambda b: b[0]))
        object.__setattr__(self, "blocks", canon)
        seen: set[int] = set()
        for b in canon:
            if not b:
                raise ValidationError("blocks must be non-empty")
            for x in b:
                if not isinstance(x, int) or not 1 <= x <= self.n:
                    raise ValidationError(f"element {x!r} out of range 1..{self.n}")
                if x in seen:
                    raise ValidationError(f"element {x} appears in two blocks")
                seen.add(x)
        for b1, b2 in combinations(canon, 2):
            if _blocks_interleave(b1, b2):
                raise ValidationError(f"blocks {b1} and {b2} cross")

    @property
    def support(self) -> frozenset[int]:
        return frozenset(x for b in self.blocks for x in b)

    @property
    def is_exhaustive(self) -> bool:
        return len(self.support) == self.n

    def block_of(self, x: int) -> tuple[int, ...] | None:
        for b in self.blocks:
            if x in b:
                return b
        return None

    def __str__(self) -> str:
        return "|".join(",".join(str(x) for x in b) for b in self.blocks)


def partition(n: int, blocks) -> Partition:
    return Partition(n, tuple(tuple(b) for b in blocks))


def parse_partition(text: str, n: int) -> Partition:
    s = text.strip()
    if not s:
        return Partition(n, ())
    blocks = []
    for part in s.split("|"):
        try:
            blocks.append(tuple(int(x) for x in part.split(",") if x.strip() != ""))
        except ValueError:
            raise ValidationError(f"cannot parse partition {text!r}")
    return partition(n, blocks)


def format_partition(p: Partition) -> str:
    return str(p)


def is_noncrossing(blocks, n: int) -> bool:
    """Crossing test on a raw collection of blocks.

    Raises on overlapping blocks or out-of-range elements; returns False
    exactly when two blocks interleave.
    """
    canon = []
    seen: set[int] = set()
    for b in blocks:
        bb = tuple(sorted(b))
        if not bb:
            raise ValidationError("blocks must be non-empty")
        for x in bb:
            if not 1 <= x <= n:
                raise ValidationError(f"element {x} out of range 1..{n}")
            if x in seen:
                raise ValidationError(f"element {x} appears in two blocks")
            seen.add(x)
        canon.append(bb)
    return not any(_blocks_interleave(b1, b2) for b1, b2 in combinations(canon, 2))


def catalan(k: int) -> int:
    if k < 0:
        raise ValidationError("Catalan numbers are indexed by k >= 0")
    return comb(2 * k, k) // (k + 1)


def nnc_count(n: int) -> int:
    """Number of non-exhaustive non-crossing partitions of [n]:
    sum_{k=0}^{n} binom(n,k) * C_k, in exact integer arithmetic."""
    if n < 0:
        raise ValidationError("n must be >= 0")
    return sum(comb(n, k) * catalan(k) for k in range(n + 1))


@lru_cache(maxsize=None)
def _nc_blocklists(els: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All non-crossing partitions of a sorted tuple of elements.

    The block of the least element is chosen first; the remaining elements
    fall into the gaps between consecutive block members and are partitioned
    independently, which yields each non-crossing partition exactly once.
    """
    if not els:
        return ((),)
    first, rest = els[0], els[1:]
    out = []
    for r in range(len(rest) + 1):
        for tail in combinations(rest, r):
            block = (first,) + tail
            bounds = block[1:] + (None,)
            gaps: list[list[int]] = [[] for _ in bounds]
            gi = 0
            for x in rest:
                if x in tail:
                    continue
                while bounds[gi] is not None and x > bounds[gi]:
                    gi += 1
                gaps[gi].append(x)
            for combo in product(*(_nc_blocklists(tuple(g)) for g in gaps)):
                merged = (block,) + tuple(b for part in combo for b in part)
                out.append(merged)
    return tuple(out)


def nc_enumerate(n: int) -> Iterator[Partition]:
    """All exhaustive non-crossing partitions of [n]; Catalan(n) of them."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    if n > _enumeration_guard():
        raise GuardExceeded(f"enumeration guard exceeded: n = {n} > {_enumeration_guard()}")
    for blocks in _nc_blocklists(tuple(range(1, n + 1))):
        yield Partition(n, blocks)


def nnc_enumerate(n: int) -> Iterator[Partition]:
    """All non-exhaustive non-crossing partitions of [n], grouped by support."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    if n > _enumeration_guard():
        raise GuardExceeded(f"enumeration guard exceeded: n = {n} > {_enumeration_guard()}")
    for k in range(n + 1):
        for support in combinations(range(1, n + 1), k):
            for blocks in _nc_blocklists(support):
                yield Partition(n, blocks)


def _same_n(p: Partition, q: Partition) -> int:
    if p.n != q.n:
        raise ValidationError(f"partition size mismatch: {p.n} != {q.n}")
    return p.n


def leq(p: Partition, q: Partition) -> bool:
    """Refinement order: every block of p is contained in a block of q."""
    _same_n(p, q)
    owner: dict[int, int] = {}
    for bi, b in enumerate(q.blocks):
        for x in b:
            owner[x] = bi
    for b in p.blocks:
        first = owner.get(b[0])
        if first is None or any(owner.get(x) != first for x in b[1:]):
            return False
    return True


def meet(p: Partition, q: Partition) -> Partition:
    """Greatest lower bound: non-empty blockwise intersections."""
    n = _same_n(p, q)
    blocks = []
    for a in p.blocks:
        sa = set(a)
        for b in q.blocks:
            c = sa.intersection(b)
            if c:
                blocks.append(tuple(sorted(c)))
    return Partition(n, tuple(blocks))


def _merge_crossing_blocks(blocks: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Merge interleaving blocks until none remain.

    The scan order is deterministic but immaterial: every merge is forced
    in any non-crossing coarsening, so the fixpoint is unique.
    """
    work = sorted(blocks)
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            for j in range(i + 1, len(work)):
                if _blocks_interleave(work[i], work[j]):
                    merged = tuple(sorted(work[i] + work[j]))
                    work = [b for k, b in enumerate(work) if k not in (i, j)]
                    work.append(merged)
                    work.sort()
                    changed = True
                    break
            if changed:
                break
    return tuple(work)


def join(p: Partition, q: Partition) -> Partition:
    """Least upper bound in NNC_n.

    Complete both arguments by singletons, join as exhaustive partitions
    (transitive closure of the union of the block relations, then merging
    of crossing blocks), and drop the singletons supported by neither
    argument.
    """
    n = _same_n(p, q)
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for part in (p, q):
        for b in part.blocks:
            for x in b[1:]:
                union(b[0], x)
    classes: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        classes.setdefault(find(x), []).append(x)
    blocks = _merge_crossing_blocks([tuple(sorted(c)) for c in classes.values()])
    keep = p.support | q.support
    return Partition(n, tuple(b for b in blocks if len(b) > 1 or b[0] in keep))


def rotate(p: Partition, d: int) -> Partition:
    """Rotate clockwise by d steps: every element i maps to i - d mod n."""
    n = p.n
    return Partition(n, tuple(tuple((x - 1 - d) % n + 1 for x in b) for b in p.blocks))


def _require_exhaustive_nc(p: Partition) -> None:
    if not p.is_exhaustive:
        raise ValidationError("Kreweras complement requires an exhaustive non-crossing partition")


def kreweras(p: Partition) -> Partition:
    """Kreweras complement of an exhaustive non-crossing partition.

    Computed through the classical cycle description: let sigma be the
    permutation whose cycles are the blocks traversed in increasing order
    and c the long cycle i -> i+1; the complement blocks are the cycles of
    sigma^{-1} . c.  This is the partition of the primed positions in the
    maximal non-crossing partition of the interleaved 2n-cycle containing p
    (the doubling construction is kept alongside as an independent oracle).
    """
    _require_exhaustive_nc(p)
    n = p.n
    sigma_inv: dict[int, int] = {}
    for b in p.blocks:
        for idx, el in enumerate(b):
            sigma_inv[b[(idx + 1) % len(b)]] = el
    perm = {i: sigma_inv[i % n + 1] for i in range(1, n + 1)}
    blocks = []
    seen: set[int] = set()
    for start in range(1, n + 1):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        blocks.append(tuple(sorted(cyc)))
    return Partition(n, tuple(blocks))


def kreweras_via_doubling(p: Partition) -> Partition:
    """Independent computation of the complement from its definition.

    Embed p on the odd positions of [2n] (i at 2i-1, i' at 2i) and group
    the primed positions that no block of p separates; the result is the
    primed part of the maximal non-crossing partition of [2n] containing p.
    """
    _require_exhaustive_nc(p)
    n = p.n
    pblocks = [tuple(2 * e - 1 for e in b) for b in p.blocks]
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in combinations(range(1, n + 1), 2):
        chord = (2 * i, 2 * j)
        if not any(_blocks_interleave(chord, pb) for pb in pblocks):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[rj] = ri
    classes: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        classes.setdefault(find(x), []).append(x)
    out = Partition(n, tuple(tuple(sorted(c)) for c in classes.values()))
    combined = [tuple(2 * e - 1 for e in b) for b in p.blocks]
    combined += [tuple(2 * e for e in b) for b in out.blocks]
    if not is_noncrossing(combined, 2 * n):
        raise AssertionError("doubling construction produced a crossing configuration")
    return out


def kreweras_inverse(p: Partition) -> Partition:
    """Inverse complement; K of the anticlockwise rotation, since K.K is
    the clockwise rotation."""
    return kreweras(rotate(p, -1))


def join_via_kreweras(p: Partition, q: Partition) -> Partition:
    """Join of two exhaustive non-crossing partitions by duality:
    K^{-1}(K(p) meet K(q)).  Cross-check for the closure-based join."""
    _require_exhaustive_nc(p)
    _require_exhaustive_nc(q)
    return kreweras_inverse(meet(kreweras(p), kreweras(q)))


def finest(n: int) -> Partition:
    return Partition(n, tuple((i,) for i in range(1, n + 1)))


def coarsest(n: int) -> Partition:
    return Partition(n, (tuple(range(1, n + 1)),))


def empty(n: int) -> Partition:
    return Partition(n, ())
