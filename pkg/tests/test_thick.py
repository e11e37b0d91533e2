import random

import pytest

from cluster_lattice.circle import Arc, marked, parse_arc
from cluster_lattice.errors import ValidationError
from cluster_lattice.noncrossing import coarsest, empty, leq, nnc_enumerate, partition
from cluster_lattice.thick import (
    ThickSubcat,
    thick_contains,
    thick_generated,
    thick_join,
    thick_leq,
    thick_meet,
)


def random_arc(rng, n, lo=-3, hi=3):
    while True:
        i, j = rng.randint(1, n), rng.randint(1, n)
        k, l = rng.randint(lo, hi), rng.randint(lo, hi)
        if i == j and abs(k - l) <= 1:
            continue
        return Arc(marked(i, k), marked(j, l))


class TestMembership:
    def test_two_region_example(self):
        t = ThickSubcat(partition(6, [[1, 3], [4, 5, 6]]))
        assert thick_contains(t, parse_arc("[1:2,3:0]"))
        assert not thick_contains(t, parse_arc("[1:2,2:0]"))
        assert thick_contains(t, parse_arc("[4:0,4:7]"))

    def test_out_of_range_arc(self):
        t = ThickSubcat(partition(2, [[1, 2]]))
        with pytest.raises(ValidationError):
            thick_contains(t, parse_arc("[1:0,3:0]"))


class TestGenerated:
    def test_single_arc(self):
        assert thick_generated([parse_arc("[1:0,3:0]")], 4).partition == partition(4, [[1, 3]])

    def test_interleaving_arcs_merge(self):
        got = thick_generated([parse_arc("[1:0,3:0]"), parse_arc("[2:0,4:0]")], 4)
        assert got.partition == coarsest(4)

    def test_empty_input(self):
        assert thick_generated([], 4).partition == empty(4)

    def test_closure_soundness(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(2, 5)
            arcs = [random_arc(rng, n) for _ in range(rng.randint(1, 4))]
            t = thick_generated(arcs, n)
            assert all(thick_contains(t, a) for a in arcs)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_closure_minimality(self, n):
        rng = random.Random(n)
        candidates = list(nnc_enumerate(n))
        for _ in range(25):
            arcs = [random_arc(rng, n) for _ in range(rng.randint(1, 3))]
            t = thick_generated(arcs, n)
            for q in candidates:
                tq = ThickSubcat(q)
                if all(thick_contains(tq, a) for a in arcs):
                    assert thick_leq(t, tq)

    def test_input_order_is_immaterial(self):
        rng = random.Random(11)
        for _ in range(30):
            n = rng.randint(2, 5)
            arcs = [random_arc(rng, n) for _ in range(4)]
            expected = thick_generated(arcs, n)
            shuffled = arcs[:]
            rng.shuffle(shuffled)
            assert thick_generated(shuffled, n) == expected


class TestLatticeTransport:
    def test_meet(self):
        got = thick_meet(ThickSubcat(partition(4, [[1, 3]])), ThickSubcat(partition(4, [[1, 2]])))
        assert got.partition == partition(4, [[1]])

    def test_bottom(self):
        for p in nnc_enumerate(3):
            assert thick_leq(ThickSubcat(empty(3)), ThickSubcat(p))

    def test_join(self):
        got = thick_join(ThickSubcat(partition(4, [[1]])), ThickSubcat(partition(4, [[3]])))
        assert got.partition == partition(4, [[1], [3]])

    def test_order_matches_membership(self):
        rng = random.Random(3)
        ps = list(nnc_enumerate(3))
        arcs = [random_arc(rng, 3) for _ in range(80)]
        for p in ps:
            for q in ps:
                tp, tq = ThickSubcat(p), ThickSubcat(q)
                member_incl = all(thick_contains(tq, a) for a in arcs if thick_contains(tp, a))
                if thick_leq(tp, tq):
                    assert member_incl
                if leq(p, q):
                    assert thick_leq(tp, tq)
