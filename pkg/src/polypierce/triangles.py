"""Negative (empty) triangles of a minimal system and their midpoint structure.

A direction triple is empty when the three minimal plus sides have empty
common intersection; the minus sides then bound a positive-area triangle.
The midpoints of its edges span the medial triangle that drives the piercing
recursions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DegenerateTriple
from .family import MinimalSystem
from .geometry import Halfplane, Point, line_intersect, midpoint, triple_plus_empty


@dataclass(frozen=True)
class TriangleType:
    """An ordered direction triple i < j < k identifying a triangle shape."""

    dirs: tuple[int, int, int]

    def __init__(self, dirs):
        i, j, k = dirs
        if not i < j < k:
            raise ValueError("direction triple must be strictly increasing")
        object.__setattr__(self, "dirs", (i, j, k))


@dataclass(frozen=True)
class EmptyTriangle:
    dirs: tuple[int, int, int]
    sides: tuple[Halfplane, Halfplane, Halfplane]
    vertices: tuple[Point, Point, Point]
    midpoints: tuple[Point, Point, Point]

    @property
    def type(self) -> TriangleType:
        return TriangleType(self.dirs)


def _build_triangle(dirs, sides) -> EmptyTriangle:
    e1, e2, e3 = sides
    v12 = line_intersect(e1, e2)
    v13 = line_intersect(e1, e3)
    v23 = line_intersect(e2, e3)
    if v12 is None or v13 is None or v23 is None:
        raise DegenerateTriple(
            f"direction triple {dirs} has parallel minimal boundary lines"
        )
    # Plus-emptiness rules out concurrent lines (a shared point would be in
    # every closed plus side), so the triangle has positive area.
    area2 = (v13.x - v12.x) * (v23.y - v12.y) - (v13.y - v12.y) * (v23.x - v12.x)
    assert area2 != 0
    # Vertex t is opposite side t; midpoint t is the midpoint of the edge on
    # boundary line t (the two vertices lying on that line).
    vertices = (v23, v13, v12)
    midpoints = (midpoint(v12, v13), midpoint(v12, v23), midpoint(v13, v23))
    for t in range(3):
        assert sides[t].on_boundary(midpoints[t])
    return EmptyTriangle(dirs=tuple(dirs), sides=tuple(sides), vertices=vertices,
                         midpoints=midpoints)


def enumerate_empty_triangles(ms: MinimalSystem) -> list[EmptyTriangle]:
    """One triangle per empty direction triple, sorted by the triple."""
    out = []
    for dirs in combinations(ms.dirs(), 3):
        sides = tuple(ms.entries[j] for j in dirs)
        if triple_plus_empty(*sides):
            out.append(_build_triangle(dirs, sides))
    return out


def empty_types(ms: MinimalSystem) -> set[tuple[int, int, int]]:
    """The set of empty direction triples, without building the triangles."""
    return {
        dirs
        for dirs in combinations(ms.dirs(), 3)
        if triple_plus_empty(*(ms.entries[j] for j in dirs))
    }


def midpoint_structure(e: EmptyTriangle):
    """Midpoints plus the medial triangle's sides.

    Medial side t is parallel to side t with the same outward normal and
    passes through the other two midpoints.
    """
    medial = []
    for t in range(3):
        other = [e.midpoints[u] for u in range(3) if u != t]
        n = e.sides[t].normal
        c = n.dot(other[0])
        assert n.dot(other[1]) == c
        medial.append(Halfplane(n, c))
    return e.midpoints, tuple(medial)
