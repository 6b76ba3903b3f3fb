"""Exact rational 2D kernel: points, directions, halfplanes, predicates.

All coordinates are `fractions.Fraction`; every predicate is decided exactly.
A halfplane is stored as an outward normal plus an offset.  Its plus side is
{p : normal . p <= offset}, the minus side is {p : normal . p >= offset}, and
the two sides share the boundary line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import EmptySystem

Rat = Fraction


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    return Fraction(v)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __init__(self, x, y):
        object.__setattr__(self, "x", _frac(x))
        object.__setattr__(self, "y", _frac(y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, s) -> "Point":
        s = _frac(s)
        return Point(self.x * s, self.y * s)

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


@dataclass(frozen=True)
class Direction:
    """Primitive integer outward-normal vector; equality is field equality."""

    a: int
    b: int

    def __init__(self, a: int, b: int):
        if a == 0 and b == 0:
            raise ValueError("zero direction")
        g = math.gcd(abs(a), abs(b))
        object.__setattr__(self, "a", a // g)
        object.__setattr__(self, "b", b // g)

    def dot(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y

    def neg(self) -> "Direction":
        return Direction(-self.a, -self.b)

    def __repr__(self):
        return f"Direction({self.a}, {self.b})"


def cross(d1: Direction, d2: Direction) -> int:
    return d1.a * d2.b - d1.b * d2.a


def angle_key(d: Direction):
    """Sort key realizing exact polar order on [0, 2pi) from the +x axis.

    Within one half-plane of angles the order is decided by a cross product,
    so the key is a (half, cmp) pair usable via tuple comparison only after
    pairing with cmp_to_key; use `sort_by_angle` instead of this directly.
    """
    upper = 0 if (d.b > 0 or (d.b == 0 and d.a > 0)) else 1
    return upper


def angle_cmp(d1: Direction, d2: Direction) -> int:
    h1, h2 = angle_key(d1), angle_key(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    c = cross(d1, d2)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


@dataclass(frozen=True)
class Halfplane:
    normal: Direction
    offset: Fraction

    def __init__(self, normal: Direction, offset):
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "offset", _frac(offset))

    def value(self, p: Point) -> Fraction:
        """normal . p - offset; <= 0 on the plus side, >= 0 on the minus side."""
        return self.normal.dot(p) - self.offset

    def plus_contains(self, p: Point) -> bool:
        return self.value(p) <= 0

    def minus_contains(self, p: Point) -> bool:
        return self.value(p) >= 0

    def on_boundary(self, p: Point) -> bool:
        return self.value(p) == 0

    def translate(self, v: Point) -> "Halfplane":
        return Halfplane(self.normal, self.offset + self.normal.dot(v))

    def __repr__(self):
        return f"Halfplane({self.normal!r}, {self.offset})"


def line_intersect(h1: Halfplane, h2: Halfplane) -> Optional[Point]:
    """Intersection point of the two boundary lines; None when parallel."""
    d = cross(h1.normal, h2.normal)
    if d == 0:
        return None
    a1, b1, c1 = h1.normal.a, h1.normal.b, h1.offset
    a2, b2, c2 = h2.normal.a, h2.normal.b, h2.offset
    x = Fraction(c1 * b2 - c2 * b1, d)
    y = Fraction(a1 * c2 - a2 * c1, d)
    return Point(x, y)


def contains(halfplanes: Iterable[Halfplane], p: Point) -> bool:
    """Closed containment in the intersection of the plus sides."""
    return all(h.plus_contains(p) for h in halfplanes)


def _foot_of_perpendicular(h: Halfplane) -> Point:
    """Point of h's boundary line nearest the origin (always rational)."""
    a, b, c = h.normal.a, h.normal.b, h.offset
    n2 = a * a + b * b
    return Point(Fraction(a, 1) * c / n2, Fraction(b, 1) * c / n2)


def _solve(system: Sequence[Halfplane]) -> Optional[Point]:
    """Deterministic witness of the plus-side intersection, or None if empty.

    When the feasible region has a vertex the witness is its lexicographically
    smallest one (min x, then min y).  Vertex-free nonempty regions only occur
    when all normals are collinear; those fall back to a canonical boundary
    point nearest the origin.
    """
    if not system:
        return Point(0, 0)

    all_parallel = True
    for i in range(len(system)):
        for j in range(i + 1, len(system)):
            if cross(system[i].normal, system[j].normal) != 0:
                all_parallel = False
                break
        if not all_parallel:
            break

    if all_parallel:
        # One-dimensional problem along t = d . p.
        d = system[0].normal
        hi = None  # (bound, input index)
        lo = None
        for idx, h in enumerate(system):
            if h.normal == d:
                if hi is None or h.offset < hi[0]:
                    hi = (h.offset, idx)
            else:  # h.normal == -d by primitivity
                bound = -h.offset
                if lo is None or bound > lo[0]:
                    lo = (bound, idx)
        if lo is not None and hi is not None and lo[0] > hi[0]:
            return None
        if lo is not None and hi is not None:
            idx = min(lo[1], hi[1])
        elif hi is not None:
            idx = hi[1]
        else:
            idx = lo[1]
        return _foot_of_perpendicular(system[idx])

    # Some pair of normals is independent: a nonempty region has a vertex,
    # and every vertex is the meet of two boundary lines.
    best: Optional[Point] = None
    for i in range(len(system)):
        for j in range(i + 1, len(system)):
            p = line_intersect(system[i], system[j])
            if p is None:
                continue
            if not contains(system, p):
                continue
            if best is None or (p.x, p.y) < (best.x, best.y):
                best = p
    return best


def feasible(system: Sequence[Halfplane]) -> Optional[Point]:
    """A point of the intersection of all plus sides, or None iff empty."""
    return _solve(system)


def canonical_witness(system: Sequence[Halfplane]) -> Point:
    """Deterministic point of a feasible system; raises EmptySystem otherwise."""
    p = _solve(system)
    if p is None:
        raise EmptySystem("halfplane system has empty plus-intersection")
    return p


def triple_plus_empty(h1: Halfplane, h2: Halfplane, h3: Halfplane) -> bool:
    """True iff the three plus sides have empty common intersection."""
    return _solve((h1, h2, h3)) is None


def region_vertices(system: Sequence[Halfplane]) -> list[Point]:
    """All vertices of the plus-intersection, sorted counterclockwise.

    Intended for bounded regions (rendering, template validation); for
    unbounded regions it returns whatever vertices exist.
    """
    verts: list[Point] = []
    for i in range(len(system)):
        for j in range(i + 1, len(system)):
            p = line_intersect(system[i], system[j])
            if p is None or not contains(system, p):
                continue
            if p not in verts:
                verts.append(p)
    if len(verts) <= 2:
        return sorted(verts, key=lambda q: (q.x, q.y))
    cx = sum(v.x for v in verts) / len(verts)
    cy = sum(v.y for v in verts) / len(verts)

    def polar(v: Point):
        return math.atan2(float(v.y - cy), float(v.x - cx))

    return sorted(verts, key=polar)
