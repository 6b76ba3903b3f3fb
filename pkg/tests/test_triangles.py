from fractions import Fraction as F

import pytest

from polypierce import (
    DegenerateTriple,
    Direction,
    Family,
    Halfplane,
    MinimalSystem,
    Point,
    RelatedPolygon,
    enumerate_empty_triangles,
    minimal_system,
    midpoint_structure,
)
from polypierce.triangles import TriangleType, empty_types
from conftest import translate_of


def test_triangle_type_requires_sorted_triple():
    TriangleType((0, 1, 2))
    with pytest.raises(ValueError):
        TriangleType((2, 1, 0))


class TestEnumerate:
    def test_three_translate_triangle(self, three_translate_family):
        ms = minimal_system(three_translate_family)
        tris = enumerate_empty_triangles(ms)
        assert len(tris) == 1
        tri = tris[0]
        assert tri.dirs == (0, 1, 2)
        assert set(tri.vertices) == {
            Point(F(2, 5), F(3, 5)),
            Point(F(3, 5), F(2, 5)),
            Point(F(3, 5), F(3, 5)),
        }

    def test_single_member_no_triangles(self, unit_triangle):
        fam = Family(unit_triangle, [translate_of(unit_triangle, Point(0, 0))])
        assert enumerate_empty_triangles(minimal_system(fam)) == []

    def test_two_directions_no_triples(self, unit_triangle):
        fam = Family(unit_triangle, [RelatedPolygon({0: 1, 1: 0})])
        assert enumerate_empty_triangles(minimal_system(fam)) == []

    def test_vertices_lie_on_their_lines(self, three_translate_family):
        ms = minimal_system(three_translate_family)
        for tri in enumerate_empty_triangles(ms):
            for t in range(3):
                # vertex t is opposite side t; the other two sides pass through it
                for u in range(3):
                    if u != t:
                        assert tri.sides[u].on_boundary(tri.vertices[t])

    def test_degenerate_parallel_pair(self):
        # Hand-built minimal system with an empty triple containing two
        # parallel disjoint halfplanes (x <= 0 and x >= 1).
        ms = MinimalSystem(
            entries={
                0: Halfplane(Direction(1, 0), 0),
                1: Halfplane(Direction(-1, 0), -1),
                2: Halfplane(Direction(0, 1), 1),
            },
            witness={0: 0, 1: 1, 2: 2},
        )
        with pytest.raises(DegenerateTriple):
            enumerate_empty_triangles(ms)

    def test_count_bounded_by_triples(self, three_translate_family):
        ms = minimal_system(three_translate_family)
        n = three_translate_family.template.n
        assert len(empty_types(ms)) <= n * (n - 1) * (n - 2) // 6


class TestMidpointStructure:
    def test_three_translate_midpoints(self, three_translate_family):
        ms = minimal_system(three_translate_family)
        tri = enumerate_empty_triangles(ms)[0]
        mids, medial = midpoint_structure(tri)
        by_line = {}
        for t in range(3):
            assert tri.sides[t].on_boundary(mids[t])
            by_line[tri.sides[t].normal] = mids[t]
        assert by_line[Direction(0, -1)] == Point(F(1, 2), F(3, 5))  # on y = 3/5
        assert by_line[Direction(-1, 0)] == Point(F(3, 5), F(1, 2))  # on x = 3/5
        assert by_line[Direction(1, 1)] == Point(F(1, 2), F(1, 2))   # on x + y = 1

    def test_midpoints_strictly_inside_other_minus_sides(self, three_translate_family):
        ms = minimal_system(three_translate_family)
        tri = enumerate_empty_triangles(ms)[0]
        for t in range(3):
            for u in range(3):
                if u != t:
                    assert tri.sides[u].value(tri.midpoints[t]) > 0

    def test_medial_sides_parallel_through_other_midpoints(self, three_translate_family):
        ms = minimal_system(three_translate_family)
        tri = enumerate_empty_triangles(ms)[0]
        mids, medial = midpoint_structure(tri)
        for t in range(3):
            assert medial[t].normal == tri.sides[t].normal
            for u in range(3):
                if u != t:
                    assert medial[t].on_boundary(mids[u])

    def test_medial_triangle_inside_and_opposite_vertex_outside(self, three_translate_family):
        ms = minimal_system(three_translate_family)
        tri = enumerate_empty_triangles(ms)[0]
        mids, medial = midpoint_structure(tri)
        for m in mids:
            for side in tri.sides:
                assert side.minus_contains(m)
        for t in range(3):
            # medial plus-side strictly contains the edge of T on line t
            # (both vertices on that line) and excludes the opposite vertex
            for u in range(3):
                if u != t:
                    assert medial[t].value(tri.vertices[u]) < 0
            assert medial[t].value(tri.vertices[t]) > 0
