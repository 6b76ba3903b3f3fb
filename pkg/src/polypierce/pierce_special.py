"""Piercing for the special template class: one horizontal bottom edge, one
vertical right edge, all remaining edges of positive slope.

The loop repeatedly targets the empty triangle built on the smallest-slope
direction, emits its three edge midpoints (plus one auxiliary vertex in the
harder case), removes every member pierced so far, and re-derives the minimal
system.  n = 3 is a proved shortcut: members coincide with their restricted
hulls, so the three midpoints pierce outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ClaimViolation, NotSpecialClass
from .family import Family, RelatedPolygon, minimal_system
from .geometry import (
    Direction,
    Halfplane,
    Point,
    canonical_witness,
    line_intersect,
)
from .pierce_general import PiercingResult, TraceNode
from .triangles import EmptyTriangle, _build_triangle, empty_types

_DOWN = Direction(0, -1)
_RIGHT = Direction(1, 0)


@dataclass(frozen=True)
class SpecialForm:
    h_index: int
    v_index: int
    slope_indices: tuple[tuple[int, Fraction], ...]  # (dir index, edge slope), ascending


@dataclass
class Case2Construction:
    H: Point
    h_s: Halfplane
    v_s: Halfplane
    P: Point
    chosen_i: int
    P_i: Point
    X: Point
    Y: Point
    T_i_vertices: tuple[Point, Point, Point]


def edge_slope(d: Direction) -> Optional[Fraction]:
    """Slope of the boundary line of a positive-slope edge normal (-a, b);
    None when the normal is outside that open cone."""
    if d.a < 0 and d.b > 0:
        return Fraction(-d.a, d.b)
    return None


def classify_special(t) -> Optional[SpecialForm]:
    h_index = v_index = None
    slopes: list[tuple[Fraction, int]] = []
    for j, d in enumerate(t.normals):
        if d == _DOWN:
            if h_index is not None:
                return None
            h_index = j
        elif d == _RIGHT:
            if v_index is not None:
                return None
            v_index = j
        else:
            s = edge_slope(d)
            if s is None:
                return None
            slopes.append((s, j))
    if h_index is None or v_index is None:
        return None
    slopes.sort()
    assert len({s for s, _ in slopes}) == len(slopes), "duplicate slopes"
    return SpecialForm(
        h_index=h_index,
        v_index=v_index,
        slope_indices=tuple((j, s) for s, j in slopes),
    )


def _line_meets_triangle(normal: Direction, offset: Fraction, verts) -> bool:
    vals = [normal.dot(v) - offset for v in verts]
    return min(vals) <= 0 <= max(vals)


def teo_check(
    f: Family, member: RelatedPolygon, medial_vertices, dirs: tuple[int, int, int]
) -> bool:
    """At most one of the member's boundary lines with a direction in `dirs`
    meets the closed medial triangle."""
    hits = 0
    for j in dirs:
        c = member.offsets.get(j)
        if c is None:
            continue
        if _line_meets_triangle(f.template.normals[j], c, medial_vertices):
            hits += 1
    return hits <= 1


def _named_midpoints(e: EmptyTriangle, sf: SpecialForm, s: int):
    """Midpoints keyed by the side they lie on: (M_h, M_v, M_s)."""
    by_dir = dict(zip(e.dirs, e.midpoints))
    return by_dir[sf.h_index], by_dir[sf.v_index], by_dir[s]


def _emit(points: list[Point], new_points) -> list[int]:
    idxs = []
    for p in new_points:
        if p not in points:
            points.append(p)
        idxs.append(points.index(p))
    return idxs


def _assign_and_remove(f, remaining, points, new_idxs, assignment):
    still = []
    for i in remaining:
        hit = None
        for idx in new_idxs:
            if f.members[i].contains(f.template, points[idx]):
                hit = idx
                break
        if hit is None:
            still.append(i)
        else:
            assignment[i] = hit
    return still


def _slope_triple(sf: SpecialForm, s: int) -> tuple[int, int, int]:
    return tuple(sorted((sf.h_index, sf.v_index, s)))


def _check_triples(f: Family, sf: SpecialForm, types) -> list[int]:
    """Empty triples must all be of shape (h, v, slope); return the slope
    indices involved, in ascending-slope order."""
    slope_of = dict(sf.slope_indices)
    hit = set()
    for dirs in types:
        rest = set(dirs) - {sf.h_index, sf.v_index}
        if len(rest) != 1:
            raise ClaimViolation(
                "hv-triple-shape",
                f"empty direction triple {dirs} does not contain both the "
                "horizontal and the vertical direction",
                family=f,
            )
        hit.add(rest.pop())
    return sorted(hit, key=lambda j: slope_of[j])


def _pierce_n3(f: Family, sf: SpecialForm) -> PiercingResult:
    ms = minimal_system(f)
    types = empty_types(ms)
    points: list[Point] = []
    assignment: dict[int, int] = {}
    trace = TraceNode(members=list(range(len(f.members))))
    if types:
        s = sf.slope_indices[0][0]
        dirs = _slope_triple(sf, s)
        if types != {dirs}:
            raise ClaimViolation(
                "hv-triple-shape", f"unexpected empty triples {sorted(types)}", family=f
            )
        e = _build_triangle(dirs, tuple(ms.entries[j] for j in dirs))
        m_h, m_v, m_s = _named_midpoints(e, sf, s)
        _emit(points, [m_h, m_v, m_s])
        trace.chosen_type = dirs
    else:
        _emit(points, [canonical_witness(ms.halfplanes())])
        trace.leaf_witness = points[0]
    for i, member in enumerate(f.members):
        for idx, p in enumerate(points):
            if member.contains(f.template, p):
                assignment[i] = idx
                break
        else:
            raise ClaimViolation(
                "n3-midpoint-piercing",
                f"member {i} contains none of the emitted points",
                family=f,
            )
    return PiercingResult(
        points=points,
        assignment=assignment,
        trace=trace,
        initial_type_count=len(types),
        bound=3,
    )


def pierce_special(f: Family) -> PiercingResult:
    """Pierce a pairwise-intersecting family of the special class with at most
    4(n-2) points (3 for n = 3)."""
    sf = classify_special(f.template)
    if sf is None:
        raise NotSpecialClass("template is not horizontal+vertical+positive-slope")
    if f.template.n == 3:
        return _pierce_n3(f, sf)

    n = f.template.n
    bound = 4 * (n - 2)
    points: list[Point] = []
    assignment: dict[int, int] = {}
    trace = TraceNode(members=list(range(len(f.members))))
    remaining = list(range(len(f.members)))
    n0: Optional[int] = None
    handled: set[int] = set()
    prev_count: Optional[int] = None

    while remaining:
        sub = f.subfamily(remaining)
        ms = minimal_system(sub)
        types = empty_types(ms)
        if n0 is None:
            n0 = len(types)
        if prev_count is not None and len(types) >= prev_count:
            raise ClaimViolation(
                "triangle-count-progress",
                f"empty-triple count did not decrease ({prev_count} -> {len(types)})",
                family=sub,
            )
        prev_count = len(types)
        candidates = _check_triples(sub, sf, types)
        node = TraceNode(members=list(remaining))
        trace.children.append(node)
        if not candidates:
            w = canonical_witness(ms.halfplanes())
            idxs = _emit(points, [w])
            node.leaf_witness = w
            remaining = _assign_and_remove(f, remaining, points, idxs, assignment)
            if remaining:
                raise ClaimViolation(
                    "helly-leaf",
                    "members remained unpierced after the common-point leaf",
                    family=sub,
                )
            break

        s = candidates[0]  # smallest positive slope with an empty triple
        if s in handled:
            raise ClaimViolation(
                "slope-progress",
                f"slope direction {s} produced an empty triple twice",
                family=sub,
            )
        handled.add(s)
        dirs = _slope_triple(sf, s)
        e = _build_triangle(dirs, tuple(ms.entries[j] for j in dirs))
        m_h, m_v, m_s = _named_midpoints(e, sf, s)
        node.chosen_type = dirs

        for i in remaining:
            if not teo_check(f, f.members[i], e.midpoints, dirs):
                raise ClaimViolation(
                    "two-edges-outside",
                    f"member {i} has two boundary lines meeting the medial triangle",
                    family=sub,
                )

        others = [
            j for j, _ in sf.slope_indices if j != s and j in ms.entries
        ]
        strict_minus = [j for j in others if ms.entries[j].value(m_s) > 0]
        if not strict_minus:
            new_points = [m_h, m_v, m_s]  # Case 1
        else:
            # Case 2: auxiliary triangle H X Y on the smallest-slope line.
            H = line_intersect(ms.entries[s], ms.entries[sf.v_index])
            h_s = Halfplane(_DOWN, -H.y)
            v_s = Halfplane(_RIGHT, m_s.x)
            P = Point(m_s.x, H.y)
            best = None
            for j in strict_minus:
                p_j = line_intersect(ms.entries[j], h_s)
                if best is None or (p_j.x, j) < (best[1].x, best[0]):
                    best = (j, p_j)
            chosen_i, P_i = best
            if P_i.x > P.x:
                X, Y = m_s, P
            else:
                Y = P_i
                X = line_intersect(Halfplane(_RIGHT, P_i.x), ms.entries[s])
            assert ms.entries[s].on_boundary(X)
            node.notes["case2"] = Case2Construction(
                H=H, h_s=h_s, v_s=v_s, P=P, chosen_i=chosen_i, P_i=P_i,
                X=X, Y=Y, T_i_vertices=(H, X, Y),
            )
            new_points = [m_h, m_v, m_s, X]

        idxs = _emit(points, new_points)
        remaining = _assign_and_remove(f, remaining, points, idxs, assignment)
        if remaining:
            ms2 = minimal_system(f.subfamily(remaining))
            if all(j in ms2.entries for j in dirs) and dirs in empty_types(ms2):
                raise ClaimViolation(
                    "triangle-elimination",
                    f"triple {dirs} is still empty after piercing its midpoints",
                    family=f.subfamily(remaining),
                )

    if len(points) > bound:
        raise ClaimViolation(
            "point-bound", f"emitted {len(points)} points, above 4(n-2)={bound}",
            family=f,
        )
    for i in range(len(f.members)):
        if not f.members[i].contains(f.template, points[assignment[i]]):
            raise ClaimViolation(
                "soundness", f"member {i} does not contain its assigned point",
                family=f,
            )
    return PiercingResult(
        points=points,
        assignment=assignment,
        trace=trace,
        initial_type_count=n0 or 0,
        bound=bound,
    )
