from collections import Counter

import pytest
from hypothesis import given, strategies as st

from cluster_lattice.circle import Arc, cross, marked, parse_arc
from cluster_lattice.errors import NoNonzeroMorphism, NotCrossing, PreconditionViolated
from cluster_lattice.objects import (
    ZERO_OBJECT,
    arc_object,
    cocone_of_crossing,
    factors_through,
    hom_dim,
    suspend,
    suspend_arc,
    zigzag_cone,
)


def arcs_strategy(n=2, span=8):
    pts = st.builds(marked, st.integers(1, n), st.integers(-span, span))
    return (
        st.tuples(pts, pts)
        .filter(lambda pq: not (pq[0].interval == pq[1].interval and abs(pq[0].offset - pq[1].offset) <= 1))
        .map(lambda pq: Arc(*pq))
    )


class TestSuspend:
    def test_single_step(self):
        assert suspend(arc_object([parse_arc("[1:0,2:3]")]), 1) == arc_object([parse_arc("[1:-1,2:2]")])

    def test_zeroth_power_is_identity(self):
        obj = arc_object([parse_arc("[1:0,2:3]"), parse_arc("[1:5,1:9]")])
        assert suspend(obj, 0) == obj

    def test_negative_power(self):
        assert suspend(arc_object([parse_arc("[1:0,2:0]")]), -2) == arc_object([parse_arc("[1:2,2:2]")])

    @given(arcs_strategy(), st.integers(-5, 5))
    def test_bijective(self, a, m):
        assert suspend_arc(suspend_arc(a, m), -m) == a


class TestHomDim:
    def test_crossing_pair_maps_to_suspension(self):
        x = parse_arc("[1:0,2:0]")
        xp = parse_arc("[1:1,2:2]")
        assert hom_dim(x, suspend_arc(xp, 1)) == 1

    def test_noncrossing_pair(self):
        assert hom_dim(parse_arc("[1:0,1:4]"), suspend_arc(parse_arc("[1:1,1:3]"), 1)) == 0

    def test_no_self_extension(self):
        x = parse_arc("[1:0,2:0]")
        assert hom_dim(x, suspend_arc(x, 1)) == 0

    def test_double_suspension_of_self(self):
        x = parse_arc("[1:0,2:0]")
        assert cross(x, suspend_arc(x, 1))
        assert hom_dim(x, suspend_arc(x, 2)) == 1

    @given(arcs_strategy(), arcs_strategy())
    def test_hom_formula(self, x, y):
        assert hom_dim(x, suspend_arc(y, 1)) == int(cross(x, y))


class TestFactorsThrough:
    def test_identity_factorisation(self):
        x, y = parse_arc("[1:0,2:0]"), parse_arc("[1:2,2:3]")
        assert factors_through(x, y, x)

    def test_intermediate_arc(self):
        assert factors_through(parse_arc("[1:0,2:0]"), parse_arc("[1:2,2:3]"), parse_arc("[1:1,2:1]"))

    def test_outside_window(self):
        assert not factors_through(parse_arc("[1:0,2:0]"), parse_arc("[1:2,2:3]"), parse_arc("[1:3,2:1]"))

    def test_no_morphism(self):
        with pytest.raises(NoNonzeroMorphism):
            factors_through(parse_arc("[1:0,1:4]"), parse_arc("[1:1,1:3]"), parse_arc("[1:0,1:2]"))

    @given(arcs_strategy(), arcs_strategy())
    def test_precondition_matches_hom(self, x, y):
        try:
            factors_through(x, y, x)
            had_morphism = True
        except NoNonzeroMorphism:
            had_morphism = False
        assert had_morphism == (hom_dim(x, y) == 1)


class TestCocone:
    def test_both_chords(self):
        tri = cocone_of_crossing(parse_arc("[1:2,2:3]"), parse_arc("[1:0,2:0]"))
        assert tri.middle == arc_object([parse_arc("[1:0,1:2]"), parse_arc("[2:0,2:3]")])
        assert tri.first == arc_object([parse_arc("[1:2,2:3]")])
        assert tri.last == arc_object([parse_arc("[1:0,2:0]")])

    def test_both_chords_trivial(self):
        tri = cocone_of_crossing(parse_arc("[1:1,2:1]"), parse_arc("[1:0,2:0]"))
        assert tri.middle.is_zero

    def test_one_chord_survives(self):
        tri = cocone_of_crossing(parse_arc("[1:1,2:3]"), parse_arc("[1:0,2:0]"))
        assert tri.middle == arc_object([parse_arc("[2:0,2:3]")])

    def test_not_crossing(self):
        with pytest.raises(NotCrossing):
            cocone_of_crossing(parse_arc("[1:1,1:3]"), parse_arc("[1:0,1:4]"))

    @given(arcs_strategy(), arcs_strategy())
    def test_endpoint_containment(self, a, b):
        if not cross(a, b):
            return
        tri = cocone_of_crossing(b, a)
        outer = set(tri.first.endpoint_multiset()) | set(tri.last.endpoint_multiset())
        assert set(tri.middle.endpoint_multiset()) <= outer

    @given(arcs_strategy(), arcs_strategy())
    def test_endpoint_multiset_identity(self, a, b):
        if not cross(a, b):
            return
        tri = cocone_of_crossing(b, a)
        if len(tri.middle.summands) == 2:
            assert Counter(tri.middle.endpoint_multiset()) == Counter(
                tri.first.endpoint_multiset() + tri.last.endpoint_multiset()
            )


class TestZigzag:
    def test_single_arc_matches_extension(self):
        tri = zigzag_cone(parse_arc("[1:0,2:0]"), [parse_arc("[1:5,2:5]")])
        assert tri.middle == arc_object([parse_arc("[1:0,2:5]"), parse_arc("[1:5,2:0]")])

    def test_two_arc_chain(self):
        tri = zigzag_cone(parse_arc("[1:0,2:0]"), [parse_arc("[1:3,2:8]"), parse_arc("[1:6,2:4]")])
        assert tri.middle == arc_object(
            [parse_arc("[1:0,2:8]"), parse_arc("[1:3,2:4]"), parse_arc("[1:6,2:0]")]
        )

    def test_trivial_piece_dropped(self):
        tri = zigzag_cone(parse_arc("[1:0,2:0]"), [parse_arc("[1:1,1:-1]")])
        assert tri.middle == arc_object([parse_arc("[1:1,2:0]")])

    @given(arcs_strategy(), arcs_strategy())
    def test_agrees_with_cocone_up_to_rotation(self, x, y):
        if not cross(x, y) or x == y:
            return
        zz = zigzag_cone(x, [y])
        ext = cocone_of_crossing(x, y)
        assert (zz.first, zz.middle, zz.last) == (ext.first, ext.middle, ext.last)

    def test_rejects_crossing_family(self):
        with pytest.raises(PreconditionViolated):
            zigzag_cone(parse_arc("[1:0,2:0]"), [parse_arc("[1:3,2:8]"), parse_arc("[1:5,2:9]")])

    def test_rejects_non_crossing_member(self):
        with pytest.raises(PreconditionViolated):
            zigzag_cone(parse_arc("[1:0,2:0]"), [parse_arc("[1:1,1:3]")])

    def test_rejects_duplicates(self):
        with pytest.raises(PreconditionViolated):
            zigzag_cone(parse_arc("[1:0,2:0]"), [parse_arc("[1:5,2:5]"), parse_arc("[1:5,2:5]")])

    def test_rejects_shared_endpoints(self):
        with pytest.raises(PreconditionViolated):
            zigzag_cone(parse_arc("[1:0,2:0]"), [parse_arc("[1:3,2:8]"), parse_arc("[1:3,2:4]")])

    def test_endpoint_multiset_identity(self):
        tri = zigzag_cone(parse_arc("[1:0,2:0]"), [parse_arc("[1:3,2:8]"), parse_arc("[1:6,2:4]")])
        assert Counter(tri.middle.endpoint_multiset()) == Counter(
            tri.first.endpoint_multiset() + tri.last.endpoint_multiset()
        )


def test_zero_object_is_empty():
    assert ZERO_OBJECT.is_zero
    assert str(ZERO_OBJECT) == "0"
