import pytest
from hypothesis import given, strategies as st

from cluster_lattice.circle import (
    ZERO,
    Arc,
    ModelParams,
    Region,
    cross,
    cyclic_lt3,
    format_arc,
    format_point,
    limit,
    linear_key,
    make_arc,
    marked,
    parse_arc,
    parse_point,
    region_contains,
    shift,
    shift_arc,
)
from cluster_lattice.errors import ValidationError

points = st.builds(marked, st.integers(1, 3), st.integers(-8, 8))
any_points = st.one_of(points, st.builds(limit, st.integers(1, 3)))


def arcs_strategy(n=3, span=8):
    pts = st.builds(marked, st.integers(1, n), st.integers(-span, span))
    return (
        st.tuples(pts, pts)
        .filter(lambda pq: not (pq[0].interval == pq[1].interval and abs(pq[0].offset - pq[1].offset) <= 1))
        .map(lambda pq: Arc(*pq))
    )


class TestLinearKey:
    def test_limit_below_interval(self):
        assert linear_key(limit(1)) < linear_key(marked(1, -100))

    def test_marked_below_next_limit(self):
        assert linear_key(marked(1, 3)) < linear_key(limit(2))

    def test_interval_dominates_offset(self):
        assert not linear_key(marked(2, 0)) < linear_key(marked(1, 99))


class TestCyclicOrder:
    def test_increasing_within_cut(self):
        assert cyclic_lt3(marked(1, 0), marked(1, 5), limit(2))

    def test_wraparound(self):
        assert cyclic_lt3(marked(2, 0), limit(1), marked(1, 3))

    def test_repeats_are_false(self):
        assert not cyclic_lt3(marked(1, 0), marked(1, 0), limit(2))

    @given(any_points, any_points, any_points)
    def test_rotation_invariance(self, x, y, z):
        assert cyclic_lt3(x, y, z) == cyclic_lt3(y, z, x) == cyclic_lt3(z, x, y)

    @given(any_points, any_points, any_points)
    def test_swap_anti_invariance(self, x, y, z):
        if len({x, y, z}) == 3:
            assert cyclic_lt3(x, y, z) != cyclic_lt3(y, x, z)


class TestShift:
    def test_successor(self):
        assert shift(marked(1, 0), 1) == marked(1, 1)

    def test_negative(self):
        assert shift(marked(2, 3), -5) == marked(2, -2)

    @given(points, st.integers(-20, 20))
    def test_inverse(self, p, m):
        assert shift(shift(p, m), -m) == p

    def test_limit_rejected(self):
        with pytest.raises(ValidationError):
            shift(limit(1), 1)


class TestMakeArc:
    def test_successor_pair_is_zero(self):
        assert make_arc(marked(1, 0), marked(1, 1)) is ZERO

    def test_equal_pair_is_zero(self):
        assert make_arc(marked(1, 0), marked(1, 0)) is ZERO

    def test_cross_interval_pair(self):
        a = make_arc(marked(1, 0), marked(2, 0))
        assert a == Arc(marked(1, 0), marked(2, 0))

    @given(points, points)
    def test_symmetry(self, p, q):
        assert make_arc(p, q) == make_arc(q, p)

    @given(points, points)
    def test_dichotomy(self, p, q):
        out = make_arc(p, q)
        trivial = p.interval == q.interval and abs(p.offset - q.offset) <= 1
        assert (out is ZERO) == trivial


class TestCross:
    def test_interleaving(self):
        assert cross(parse_arc("[1:0,2:0]"), parse_arc("[1:1,2:2]"))

    def test_nested(self):
        assert not cross(parse_arc("[1:0,1:4]"), parse_arc("[1:1,1:3]"))

    def test_half_nested(self):
        assert cross(parse_arc("[1:0,1:4]"), parse_arc("[1:2,2:0]"))

    @given(arcs_strategy(), arcs_strategy())
    def test_symmetric(self, a, b):
        assert cross(a, b) == cross(b, a)

    @given(arcs_strategy())
    def test_self(self, a):
        assert not cross(a, a)

    @given(arcs_strategy())
    def test_crosses_own_suspension_across_intervals(self, a):
        if a.lo.interval != a.hi.interval:
            assert cross(a, shift_arc(a, -1))


class TestRegions:
    def test_half_open_contains_below(self):
        r = Region(limit(1), marked(1, 0), lower_open=True, upper_open=False)
        assert region_contains(r, marked(1, -7))

    def test_half_open_excludes_above(self):
        r = Region(limit(1), marked(1, 0), lower_open=True, upper_open=False)
        assert not region_contains(r, marked(1, 1))

    def test_degenerate_region_is_empty(self):
        r = Region(limit(1), limit(1), lower_open=True, upper_open=False)
        for p in (marked(1, 0), marked(2, 3), limit(1)):
            assert not region_contains(r, p)

    def test_closed_degenerate_is_single_point(self):
        r = Region(limit(1), limit(1), lower_open=False, upper_open=False)
        assert region_contains(r, limit(1))
        assert not region_contains(r, marked(1, 0))


class TestTextSyntax:
    @pytest.mark.parametrize("text", ["a1", "a12", "1:0", "2:-4", "3:17"])
    def test_point_round_trip(self, text):
        assert format_point(parse_point(text)) == text

    def test_arc_round_trip(self):
        assert format_arc(parse_arc("[1:0,2:3]")) == "[1:0,2:3]"

    def test_arc_canonical_order(self):
        assert format_arc(parse_arc("[2:3,1:0]")) == "[1:0,2:3]"

    def test_bad_point(self):
        with pytest.raises(ValidationError):
            parse_point("b2")

    def test_trivial_arc_rejected(self):
        with pytest.raises(ValidationError):
            parse_arc("[1:0,1:1]")


def test_model_requires_two_limit_points():
    assert ModelParams(2).n == 2
    with pytest.raises(ValidationError):
        ModelParams(1)
