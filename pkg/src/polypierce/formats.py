"""JSON file formats: instances, results, counterexample artifacts.

Rationals travel as "p/q" (or "p") strings so files stay exact; the only
decimal output anywhere is the display-only SVG layer.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .family import Family, RelatedPolygon, Template, member_nonempty, validate_template
from .geometry import Direction, Point

FORMAT_VERSION = 1


class InvalidInstance(ValueError):
    pass


def _rat(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInstance(f"bad rational {s!r}: {exc}") from None


def family_to_dict(f: Family) -> dict:
    return {
        "version": FORMAT_VERSION,
        "template": {
            "normals": [[d.a, d.b] for d in f.template.normals],
            "reference_offsets": [str(c) for c in f.template.reference_offsets],
        },
        "members": [
            {"offsets": {str(j): str(c) for j, c in m.offsets.items()}}
            for m in f.members
        ],
    }


def family_from_dict(data: dict) -> Family:
    try:
        if data.get("version") != FORMAT_VERSION:
            raise InvalidInstance(f"unsupported version {data.get('version')!r}")
        tmpl = data["template"]
        normals = [Direction(int(a), int(b)) for a, b in tmpl["normals"]]
        offsets = [_rat(c) for c in tmpl["reference_offsets"]]
        template = Template(normals, offsets)
        members = []
        for m in data["members"]:
            raw = m["offsets"]
            parsed: dict[int, Fraction] = {}
            for j, c in raw.items():
                j = int(j)
                if not 0 <= j < template.n:
                    raise InvalidInstance(f"direction index {j} out of range")
                c = _rat(c)
                # Duplicate translates collapse to the tightest offset.
                if j not in parsed or c < parsed[j]:
                    parsed[j] = c
            members.append(RelatedPolygon(parsed))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidInstance):
            raise
        raise InvalidInstance(f"malformed instance: {exc}") from None
    report = validate_template(template)
    if report:
        raise InvalidInstance("invalid template: " + "; ".join(report))
    for i, m in enumerate(members):
        if not member_nonempty(template, m):
            raise InvalidInstance(f"member {i} is empty")
    if not members:
        raise InvalidInstance("family needs at least one member")
    return Family(template, members)


def save_family(f: Family, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(family_to_dict(f), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_family(path: str) -> Family:
    with open(path) as fh:
        return family_from_dict(json.load(fh))


def points_to_list(points) -> list[list[str]]:
    return [[str(p.x), str(p.y)] for p in points]


def points_from_list(data) -> list[Point]:
    return [Point(_rat(x), _rat(y)) for x, y in data]


def _trace_summary(node) -> dict:
    out = {"members": len(node.members)}
    if node.chosen_type is not None:
        out["chosen_type"] = list(node.chosen_type)
    if node.bucket_sizes is not None:
        out["bucket_sizes"] = list(node.bucket_sizes)
    if node.leaf_witness is not None:
        out["leaf_witness"] = [str(node.leaf_witness.x), str(node.leaf_witness.y)]
    if node.notes.get("case2") is not None:
        c2 = node.notes["case2"]
        out["case2"] = {
            "chosen_i": c2.chosen_i,
            "X": [str(c2.X.x), str(c2.X.y)],
        }
    if node.children:
        out["children"] = [_trace_summary(c) for c in node.children]
    return out


def result_to_dict(algorithm: str, result, verified: bool,
                   timings: Optional[dict] = None) -> dict:
    return {
        "algorithm": algorithm,
        "points": points_to_list(result.points),
        "assignment": {str(i): k for i, k in sorted(result.assignment.items())},
        "bound": result.bound,
        "initial_type_count": result.initial_type_count,
        "trace": _trace_summary(result.trace),
        "verified": verified,
        "timings": timings or {},
    }


def oracle_result_to_dict(res, timings: Optional[dict] = None) -> dict:
    return {
        "algorithm": "oracle",
        "points": points_to_list(res.witness_points),
        "optimum": res.optimum,
        "groups": res.witness_groups,
        "verified": True,
        "timings": timings or {},
    }


def save_json(data: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def counterexample_to_dict(exc) -> dict:
    out = {"claim": exc.claim, "detail": exc.detail}
    if exc.family is not None:
        out["instance"] = family_to_dict(exc.family)
    return out
