"""Templates, related polygons, families, and minimal halfplane systems.

A template is a convex n-gon given by angularly ordered outward normals plus
reference offsets (the concrete instance used for validation and rendering).
A related polygon is a member built from translates of some of the template's
halfplanes, stored as a map from direction index to offset.  Members may omit
directions, so they can be unbounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import (
    Direction,
    Halfplane,
    Point,
    angle_cmp,
    cross,
    feasible,
)

_INF = object()


@dataclass(frozen=True)
class Template:
    normals: tuple[Direction, ...]
    reference_offsets: tuple[Fraction, ...]

    def __init__(self, normals, reference_offsets):
        object.__setattr__(self, "normals", tuple(normals))
        object.__setattr__(
            self, "reference_offsets", tuple(Fraction(c) for c in reference_offsets)
        )

    @property
    def n(self) -> int:
        return len(self.normals)

    def halfplane(self, j: int, offset=None) -> Halfplane:
        c = self.reference_offsets[j] if offset is None else offset
        return Halfplane(self.normals[j], c)

    def reference_halfplanes(self) -> list[Halfplane]:
        return [self.halfplane(j) for j in range(self.n)]


@dataclass(frozen=True)
class RelatedPolygon:
    """One family member: direction index -> offset of its translate."""

    offsets: dict[int, Fraction]

    def __init__(self, offsets):
        if not offsets:
            raise ValueError("member must use at least one direction")
        object.__setattr__(
            self, "offsets", {int(j): Fraction(c) for j, c in sorted(offsets.items())}
        )

    def halfplanes(self, template: Template) -> list[Halfplane]:
        return [template.halfplane(j, c) for j, c in self.offsets.items()]

    def contains(self, template: Template, p: Point) -> bool:
        return all(h.plus_contains(p) for h in self.halfplanes(template))


@dataclass(frozen=True)
class Family:
    template: Template
    members: tuple[RelatedPolygon, ...]

    def __init__(self, template, members):
        object.__setattr__(self, "template", template)
        object.__setattr__(self, "members", tuple(members))

    def member_halfplanes(self, i: int) -> list[Halfplane]:
        return self.members[i].halfplanes(self.template)

    def subfamily(self, indices) -> "Family":
        return Family(self.template, [self.members[i] for i in indices])


@dataclass(frozen=True)
class MinimalSystem:
    """Per-direction tightest halfplane of a family, with attaining members."""

    entries: dict[int, Halfplane]
    witness: dict[int, int]

    def halfplanes(self) -> list[Halfplane]:
        return [self.entries[j] for j in sorted(self.entries)]

    def dirs(self) -> list[int]:
        return sorted(self.entries)


def _edge_interval_positive(system: list[Halfplane], i: int) -> bool:
    """Whether constraint i supports an edge of positive length of the region."""
    hi_line = system[i]
    a, b = hi_line.normal.a, hi_line.normal.b
    n2 = a * a + b * b
    p0 = Point(Fraction(a * hi_line.offset, n2), Fraction(b * hi_line.offset, n2))
    tangent = Direction(-b, a)
    lo, hi = _INF, _INF  # unbounded until constrained
    for j, h in enumerate(system):
        if j == i:
            continue
        coef = h.normal.a * tangent.a + h.normal.b * tangent.b
        rhs = h.offset - h.normal.dot(p0)
        if coef == 0:
            if rhs < 0:
                return False
        elif coef > 0:
            u = rhs / coef
            if hi is _INF or u < hi:
                hi = u
        else:
            u = rhs / coef
            if lo is _INF or u > lo:
                lo = u
    if lo is _INF or hi is _INF:
        return True
    return lo < hi


def validate_template(t: Template) -> list[str]:
    """Report every violated template invariant; empty list iff valid."""
    report: list[str] = []
    if t.n < 3:
        report.append(f"n >= 3 required, got n={t.n}")
    if len(set(t.normals)) != t.n:
        report.append("directions must be pairwise distinct")
    if len(t.reference_offsets) != t.n:
        report.append(
            f"reference_offsets length {len(t.reference_offsets)} != n={t.n}"
        )
    if not report:
        # Cyclic angular order: strictly increasing once rotated to start at
        # the smallest angle (exactly one wrap-around descent).
        descents = sum(
            1
            for i in range(t.n)
            if angle_cmp(t.normals[i], t.normals[(i + 1) % t.n]) >= 0
        )
        if descents != 1:
            report.append("normals are not in strictly increasing cyclic angular order")
    if report:
        return report
    for i in range(t.n):
        d1 = t.normals[i]
        d2 = t.normals[(i + 1) % t.n]
        if cross(d1, d2) <= 0:
            report.append(
                f"angular gap between normals {i} and {(i + 1) % t.n} is >= pi"
            )
    if report:
        return report
    system = t.reference_halfplanes()
    for i in range(t.n):
        if not _edge_interval_positive(system, i):
            report.append(f"halfplane {i} does not support an edge of positive length")
    return report


def member_nonempty(template: Template, member: RelatedPolygon) -> bool:
    return feasible(member.halfplanes(template)) is not None


def pairwise_check(f: Family) -> list[tuple[int, int]]:
    """Member-index pairs with empty (closed) intersection; empty list iff
    the family is pairwise intersecting."""
    bad = []
    systems = [f.member_halfplanes(i) for i in range(len(f.members))]
    for i in range(len(f.members)):
        for j in range(i + 1, len(f.members)):
            if feasible(systems[i] + systems[j]) is None:
                bad.append((i, j))
    return bad


def minimal_system(f: Family) -> MinimalSystem:
    entries: dict[int, Halfplane] = {}
    witness: dict[int, int] = {}
    for mi, member in enumerate(f.members):
        for j, c in member.offsets.items():
            if j not in entries or c < entries[j].offset:
                entries[j] = f.template.halfplane(j, c)
                witness[j] = mi
    dirs = sorted(entries)
    # Consequence of pairwise intersection: any two minimal plus sides meet.
    for x in range(len(dirs)):
        for y in range(x + 1, len(dirs)):
            assert feasible([entries[dirs[x]], entries[dirs[y]]]) is not None, (
                f"minimal halfplanes {dirs[x]} and {dirs[y]} are disjoint; "
                "family is not pairwise intersecting"
            )
    return MinimalSystem(entries=entries, witness=witness)


def family_intersection_witness(f: Family) -> Optional[Point]:
    """Point of the common intersection of all members, or None if empty.

    The common intersection equals the intersection of the minimal halfplanes,
    so the witness is the canonical witness of the minimal system.
    """
    ms = minimal_system(f)
    return feasible(ms.halfplanes())
