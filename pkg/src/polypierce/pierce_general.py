"""Recursive piercing of a general related family, 3^N bound.

The recursion picks an empty triangle, splits the family by which edge
midpoint each member's restricted hull contains, and recurses per bucket;
a bucket with no empty triangles is one-pierceable and yields its canonical
Helly witness.  Every step the argument relies on is a runtime guard that
raises ClaimViolation with the offending family attached.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ClaimViolation
from .family import Family, RelatedPolygon, minimal_system
from .geometry import Point, canonical_witness
from .triangles import EmptyTriangle, TriangleType, empty_types, enumerate_empty_triangles


@dataclass
class TraceNode:
    """One node of the recursion tree."""

    members: list[int]
    chosen_type: Optional[tuple[int, int, int]] = None
    bucket_sizes: Optional[tuple[int, int, int]] = None
    leaf_witness: Optional[Point] = None
    children: list["TraceNode"] = field(default_factory=list)
    notes: dict = field(default_factory=dict)


@dataclass
class PiercingResult:
    points: list[Point]
    assignment: dict[int, int]
    trace: TraceNode
    initial_type_count: int
    bound: int


def restricted_hull_contains(
    family: Family, member: RelatedPolygon, t: TriangleType, p: Point
) -> bool:
    """Containment in the member's hull restricted to the triple's directions.

    Directions the member does not use impose no constraint, so this is
    vacuously true for members using none of them.
    """
    for j in t.dirs:
        c = member.offsets.get(j)
        if c is None:
            continue
        if not family.template.halfplane(j, c).plus_contains(p):
            return False
    return True


def partition_by_midpoints(
    f: Family, e: EmptyTriangle, member_ids: Optional[list[int]] = None
) -> tuple[list[int], list[int], list[int]]:
    """Split member indices into the three midpoint buckets.

    Bucket t holds members whose restricted hull contains midpoint t and no
    earlier midpoint (first-match priority).  A member whose restricted hull
    misses all three midpoints violates the partition claim.
    """
    if member_ids is None:
        member_ids = list(range(len(f.members)))
    ttype = e.type
    buckets: tuple[list[int], list[int], list[int]] = ([], [], [])
    for i in member_ids:
        member = f.members[i]
        for t in range(3):
            if restricted_hull_contains(f, member, ttype, e.midpoints[t]):
                buckets[t].append(i)
                break
        else:
            raise ClaimViolation(
                "midpoint-partition",
                f"member {i}: restricted hull to dirs {ttype.dirs} contains "
                "none of the three edge midpoints",
                family=f,
            )
    return buckets


def _recurse(f: Family, member_ids: list[int], parent_types, points, assignment):
    node = TraceNode(members=list(member_ids))
    sub = f.subfamily(member_ids)
    ms = minimal_system(sub)
    triangles = enumerate_empty_triangles(ms)
    types_here = {tr.dirs for tr in triangles}
    if parent_types is not None and not types_here < parent_types:
        raise ClaimViolation(
            "type-elimination",
            f"child empty-triangle types {sorted(types_here)} are not a strict "
            f"subset of the parent's {sorted(parent_types)}",
            family=sub,
        )
    if not triangles:
        w = canonical_witness(ms.halfplanes())
        if w in points:
            idx = points.index(w)
        else:
            idx = len(points)
            points.append(w)
        for i in member_ids:
            assignment[i] = idx
        node.leaf_witness = w
        return node
    chosen = triangles[0]  # lexicographically smallest direction triple
    node.chosen_type = chosen.dirs
    buckets = partition_by_midpoints(f, chosen, member_ids)
    node.bucket_sizes = tuple(len(b) for b in buckets)
    for b in buckets:
        if not b:
            continue
        node.children.append(_recurse(f, b, types_here, points, assignment))
    return node


def pierce_general(f: Family) -> PiercingResult:
    """Pierce a pairwise-intersecting related family; at most 3^N0 points."""
    all_ids = list(range(len(f.members)))
    n0 = len(empty_types(minimal_system(f)))
    points: list[Point] = []
    assignment: dict[int, int] = {}
    trace = _recurse(f, all_ids, None, points, assignment)
    bound = 3 ** n0
    if len(points) > bound:
        raise ClaimViolation(
            "point-bound",
            f"emitted {len(points)} points, above 3^{n0}",
            family=f,
        )
    for i in all_ids:
        if not f.members[i].contains(f.template, points[assignment[i]]):
            raise ClaimViolation(
                "soundness",
                f"member {i} does not contain its assigned point",
                family=f,
            )
    return PiercingResult(
        points=points,
        assignment=assignment,
        trace=trace,
        initial_type_count=n0,
        bound=bound,
    )
