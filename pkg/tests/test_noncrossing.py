from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cluster_lattice.errors import GuardExceeded, ValidationError
from cluster_lattice.noncrossing import (
    Partition,
    catalan,
    coarsest,
    empty,
    finest,
    format_partition,
    is_noncrossing,
    join,
    join_via_kreweras,
    kreweras,
    kreweras_inverse,
    kreweras_via_doubling,
    leq,
    meet,
    nc_enumerate,
    nnc_count,
    nnc_enumerate,
    parse_partition,
    partition,
    rotate,
)


def all_set_partitions(elements):
    """Brute-force oracle: every set partition of the given elements."""
    elements = list(elements)
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for sub in all_set_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1 :]
        yield [[first]] + sub


class TestValidity:
    def test_worked_partition(self):
        assert is_noncrossing([[1, 3], [2], [4, 5, 6]], 6)

    def test_crossing_pair(self):
        assert not is_noncrossing([[1, 3], [2, 4]], 4)

    def test_empty_collection(self):
        assert is_noncrossing([], 6)

    def test_overlap_rejected(self):
        with pytest.raises(ValidationError):
            is_noncrossing([[1, 2], [2, 3]], 3)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValidationError):
            is_noncrossing([[1, 7]], 4)

    def test_partition_constructor_validates(self):
        with pytest.raises(ValidationError):
            partition(4, [[1, 3], [2, 4]])


class TestCounting:
    def test_small_values(self):
        assert nnc_count(1) == 2
        assert nnc_count(2) == 5
        assert nnc_count(3) == 15

    @pytest.mark.parametrize("n", range(1, 7))
    def test_nc_count_against_brute_force(self, n):
        oracle = sum(1 for p in all_set_partitions(range(1, n + 1)) if is_noncrossing(p, n))
        assert sum(1 for _ in nc_enumerate(n)) == oracle == catalan(n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_nnc_count_against_enumeration(self, n):
        assert sum(1 for _ in nnc_enumerate(n)) == nnc_count(n)

    def test_enumeration_is_duplicate_free(self):
        seen = list(nnc_enumerate(5))
        assert len(seen) == len(set(seen))

    def test_nc_enumerate_1(self):
        assert list(nc_enumerate(1)) == [partition(1, [[1]])]

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            list(nc_enumerate(13))

    def test_guard_override(self, monkeypatch):
        monkeypatch.setenv("CLUSTER_LATTICE_GUARD_N", "2")
        with pytest.raises(GuardExceeded):
            list(nc_enumerate(3))


class TestOrder:
    def test_refinement(self):
        assert leq(partition(2, [[1], [2]]), partition(2, [[1, 2]]))

    def test_not_refinement(self):
        assert not leq(partition(3, [[1, 3]]), partition(3, [[1, 2], [3]]))

    def test_reflexive(self):
        p = partition(6, [[1, 3], [2], [4, 5, 6]])
        assert leq(p, p)

    def test_n_mismatch(self):
        with pytest.raises(ValidationError):
            leq(finest(2), finest(3))


class TestMeetJoin:
    def test_meet_example(self):
        assert meet(partition(3, [[1, 2], [3]]), partition(3, [[1], [2, 3]])) == finest(3)

    def test_meet_idempotent(self):
        p = partition(6, [[1, 3], [2], [4, 5, 6]])
        assert meet(p, p) == p

    def test_meet_with_upper_bound(self):
        p = partition(3, [[1, 3], [2]])
        assert meet(p, coarsest(3)) == p

    def test_join_transitive_closure(self):
        assert join(partition(3, [[1, 2]]), partition(3, [[2, 3]])) == coarsest(3)

    def test_join_crossing_blocks_merge(self):
        assert join(partition(4, [[1, 3]]), partition(4, [[2, 4]])) == coarsest(4)

    def test_join_disjoint_supports(self):
        assert join(partition(4, [[1]]), partition(4, [[3]])) == partition(4, [[1], [3]])

    def test_join_is_least_upper_bound_nnc4(self):
        ps = list(nnc_enumerate(4))
        for p, q in combinations(ps, 2):
            j = join(p, q)
            uppers = [r for r in ps if leq(p, r) and leq(q, r)]
            assert j in uppers
            assert all(leq(j, r) for r in uppers)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_join_matches_kreweras_duality(self, n):
        ps = list(nc_enumerate(n))
        for p in ps:
            for q in ps:
                assert join(p, q) == join_via_kreweras(p, q)

    def test_bottom_and_top(self):
        for p in nnc_enumerate(3):
            assert leq(empty(3), p)
            assert leq(p, coarsest(3))


class TestKreweras:
    def test_worked_example(self):
        p = partition(6, [[1, 3], [2], [4, 5, 6]])
        assert kreweras(p) == partition(6, [[1, 2], [3, 6], [4], [5]])

    def test_finest_coarsest_swap(self):
        assert kreweras(finest(6)) == coarsest(6)
        assert kreweras(partition(2, [[1, 2]])) == finest(2)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_against_doubling_construction(self, n):
        for p in nc_enumerate(n):
            assert kreweras(p) == kreweras_via_doubling(p)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_double_complement_is_rotation(self, n):
        for p in nc_enumerate(n):
            assert kreweras(kreweras(p)) == rotate(p, 1)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_order_reversing(self, n):
        ps = list(nc_enumerate(n))
        comp = {p: kreweras(p) for p in ps}
        for p, q in combinations(ps, 2):
            assert leq(p, q) == leq(comp[q], comp[p])
            assert leq(q, p) == leq(comp[p], comp[q])

    @pytest.mark.parametrize("n", range(2, 7))
    def test_blockmates_split_in_complement(self, n):
        for p in nc_enumerate(n):
            k = kreweras(p)
            for b in p.blocks:
                for i, j in combinations(b, 2):
                    assert j not in k.block_of(i)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_inverse(self, n):
        for p in nc_enumerate(n):
            assert kreweras(kreweras_inverse(p)) == p
            assert kreweras_inverse(kreweras(p)) == p

    def test_requires_exhaustive(self):
        with pytest.raises(ValidationError):
            kreweras(partition(3, [[1, 3]]))

    def test_maximality_of_doubling(self):
        # merging any two complement blocks must break non-crossing
        for p in nc_enumerate(5):
            k = kreweras(p)
            combined = [tuple(2 * e - 1 for e in b) for b in p.blocks]
            combined += [tuple(2 * e for e in b) for b in k.blocks]
            for i, j in combinations(range(len(k.blocks)), 2):
                merged = [b for t, b in enumerate(combined[len(p.blocks) :]) if t not in (i, j)]
                merged.append(tuple(sorted(combined[len(p.blocks) + i] + combined[len(p.blocks) + j])))
                assert not is_noncrossing([*combined[: len(p.blocks)], *merged], 2 * p.n)


class TestRotate:
    def test_example(self):
        p = partition(6, [[1, 3], [2], [4, 5, 6]])
        assert rotate(p, 1) == partition(6, [[2, 6], [1], [3, 4, 5]])

    def test_identity(self):
        p = partition(6, [[1, 3], [2], [4, 5, 6]])
        assert rotate(p, 0) == p
        assert rotate(rotate(p, 1), -1) == p


class TestTextForm:
    def test_round_trip(self):
        p = parse_partition("1,3|2|4,5,6", 6)
        assert format_partition(p) == "1,3|2|4,5,6"

    def test_canonical_block_order(self):
        assert format_partition(parse_partition("4,5,6|2|1,3", 6)) == "1,3|2|4,5,6"

    def test_empty(self):
        assert parse_partition("", 4) == empty(4)
        assert format_partition(empty(4)) == ""
