"""Drawing layer: planar embedding, boundary walk, SVG and TikZ output.

The reference pair's polygon is frozen corner-for-corner; convexity and
closure of the boundary walk are swept over every MV pair in the small
boxes.
"""

from itertools import product

import pytest

from affmv.lusztig import datum, enumerate_data
from affmv.polytope import DecoratedPolytope, is_mv
from affmv.render import boundary_geometry, render_svg, render_tikz
from affmv.roots import Algebra, RootVector
from conftest import KINDS, SMALL_BOX

REFERENCE_CORNERS = [
    (0, 0), (2, 2), (3, 5), (4, 10), (4, 36), (3, 41), (2, 42),
    (-3, 37), (-4, 34), (-5, 27), (-5, 19), (-4, 12), (-3, 7), (-1, 1),
]
REFERENCE_TICKS = [(4, 28), (4, 32), (4, 34), (-5, 23), (-5, 21)]


def mv_pairs(kind):
    box = SMALL_BOX[kind]
    for a in range(box.a + 1):
        for b in range(box.b + 1):
            data = enumerate_data(kind, RootVector(a, b))
            for L, R in product(data, repeat=2):
                P = DecoratedPolytope(L, R)
                if is_mv(P).ok:
                    yield P


def cross(o, p, q):
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


class TestBoundary:
    def test_reference_polygon_is_frozen(self, reference_pair):
        corners, ticks = boundary_geometry(reference_pair)
        assert corners == REFERENCE_CORNERS
        assert ticks == REFERENCE_TICKS

    def test_tick_count_matches_the_partitions(self, reference_pair):
        _, ticks = boundary_geometry(reference_pair)
        left, right = reference_pair.left.delta, reference_pair.right.delta
        assert len(ticks) == (len(right) - 1) + (len(left) - 1)

    def test_zero_pair_is_a_point(self):
        zero = datum(Algebra.SL2_HAT)
        corners, ticks = boundary_geometry(DecoratedPolytope(zero, zero))
        assert corners == [(0, 0)] and ticks == []

    @pytest.mark.parametrize("kind", KINDS)
    def test_mv_boundaries_are_convex_and_counterclockwise(self, kind):
        for P in mv_pairs(kind):
            corners, _ = boundary_geometry(P)
            n = len(corners)
            if n < 3:
                continue
            assert len(set(corners)) == n, "repeated corner"
            for i in range(n):
                turn = cross(
                    corners[i], corners[(i + 1) % n], corners[(i + 2) % n]
                )
                assert turn >= 0, (P, corners)

    @pytest.mark.parametrize("kind", KINDS)
    def test_non_mv_pairs_still_draw(self, kind):
        d = datum(kind, delta_parts=(1,))
        P = DecoratedPolytope(d, d)
        corners, ticks = boundary_geometry(P)
        assert len(corners) >= 2 and ticks == []


class TestMarkup:
    def test_svg_structure(self, reference_pair):
        svg = render_svg(reference_pair)
        assert svg.startswith("<svg ") and svg.rstrip().endswith("</svg>")
        assert "<title>sl2hat polytope, weight (20,22)</title>" in svg
        assert svg.count("<polygon") == 1
        # One dot per corner plus one open circle per tick.
        assert svg.count('fill="black"') == len(REFERENCE_CORNERS)
        assert svg.count('fill="white"') == len(REFERENCE_TICKS)

    def test_svg_point_for_the_zero_pair(self):
        zero = datum(Algebra.A2_TWISTED)
        svg = render_svg(DecoratedPolytope(zero, zero))
        assert "<polygon" not in svg
        assert svg.count("<circle") == 1

    def test_tikz_structure(self, reference_pair):
        tikz = render_tikz(reference_pair)
        assert tikz.startswith("% sl2hat polytope, weight (20,22)")
        assert "\\begin{tikzpicture}" in tikz and "\\end{tikzpicture}" in tikz
        assert "-- cycle;" in tikz
        assert tikz.count("circle (2pt)") == len(REFERENCE_TICKS)

    def test_output_is_deterministic(self, reference_pair):
        assert render_svg(reference_pair) == render_svg(reference_pair)
        assert render_tikz(reference_pair) == render_tikz(reference_pair)
