"""Command-line surface.

Exit codes: 0 success, 1 verification/audit failure, 2 invalid input,
3 claim violation (a counterexample artifact is written next to the output).
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from fractions import Fraction

from .errors import ClaimViolation, GenerationExhausted, NotSpecialClass, TooLarge
from .family import minimal_system, pairwise_check, validate_template
from .formats import (
    InvalidInstance,
    counterexample_to_dict,
    family_to_dict,
    load_family,
    oracle_result_to_dict,
    points_from_list,
    result_to_dict,
    save_json,
)
from .generate import GenConfig, generate
from .oracle import optimal_piercing, verify_piercing
from .pierce_general import pierce_general
from .pierce_special import pierce_special
from .render import render_svg
from .triangles import empty_types

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INVALID = 2
EXIT_CLAIM = 3


def _pierce(f, algo):
    return pierce_general(f) if algo == "t1" else pierce_special(f)


def _write_cex(exc: ClaimViolation, anchor: str) -> str:
    path = anchor + ".cex.json"
    save_json(counterexample_to_dict(exc), path)
    return path


def cmd_generate(args) -> int:
    cfg = GenConfig(
        seed=args.seed,
        n=args.n,
        members=args.members,
        spread=Fraction(args.spread),
        class_mode=getattr(args, "class"),
        repair=args.repair,
    )
    try:
        fam = generate(cfg)
    except GenerationExhausted as exc:
        print(f"generation failed: {exc}", file=sys.stderr)
        return EXIT_INVALID
    save_json(family_to_dict(fam), args.out)
    print(f"wrote {args.out}: n={fam.template.n} members={len(fam.members)}")
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        fam = load_family(args.file)
    except InvalidInstance as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = validate_template(fam.template)
    bad = pairwise_check(fam)
    for line in report:
        print(f"template: {line}")
    for i, j in bad:
        print(f"disjoint members: {i} {j}")
    if report or bad:
        return EXIT_INVALID
    n0 = len(empty_types(minimal_system(fam)))
    print(f"ok: n={fam.template.n} members={len(fam.members)} empty_triangles={n0}")
    return EXIT_OK


def cmd_pierce(args) -> int:
    try:
        fam = load_family(args.file)
    except InvalidInstance as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if pairwise_check(fam):
        print("family is not pairwise intersecting", file=sys.stderr)
        return EXIT_INVALID
    t0 = time.perf_counter()
    try:
        result = _pierce(fam, args.algo)
    except NotSpecialClass as exc:
        print(f"invalid input for t2: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ClaimViolation as exc:
        path = _write_cex(exc, args.out or args.file)
        print(f"claim violation [{exc.claim}]: {exc.detail}", file=sys.stderr)
        print(f"counterexample written to {path}", file=sys.stderr)
        return EXIT_CLAIM
    elapsed = time.perf_counter() - t0
    report = verify_piercing(fam, result.points)
    data = result_to_dict(args.algo, result, report.ok,
                          timings={"pierce_seconds": round(elapsed, 6)})
    if args.out:
        save_json(data, args.out)
    print(f"{len(result.points)} points (bound {result.bound}), "
          f"verified={report.ok}")
    if not report.ok:
        print(f"unpierced members: {report.unpierced}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_exact(args) -> int:
    try:
        fam = load_family(args.file)
    except InvalidInstance as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return EXIT_INVALID
    t0 = time.perf_counter()
    try:
        res = optimal_piercing(fam, member_limit=args.limit)
    except TooLarge as exc:
        print(f"instance too large: {exc}", file=sys.stderr)
        return EXIT_INVALID
    elapsed = time.perf_counter() - t0
    report = verify_piercing(fam, res.witness_points)
    if not report.ok:
        print("oracle witness failed verification", file=sys.stderr)
        return EXIT_VERIFY
    if args.out:
        save_json(oracle_result_to_dict(
            res, timings={"oracle_seconds": round(elapsed, 6)}), args.out)
    print(f"optimum {res.optimum}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        fam = load_family(args.file)
    except InvalidInstance as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return EXIT_INVALID
    import json

    with open(args.points) as fh:
        data = json.load(fh)
    points = points_from_list(data.get("points", []))
    report = verify_piercing(fam, points)
    if report.ok:
        print(f"ok: all {len(fam.members)} members pierced")
        return EXIT_OK
    print(f"unpierced members: {report.unpierced}")
    return EXIT_VERIFY


def cmd_render(args) -> int:
    try:
        fam = load_family(args.file)
    except InvalidInstance as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return EXIT_INVALID
    points = []
    if args.points:
        import json

        with open(args.points) as fh:
            points = points_from_list(json.load(fh).get("points", []))
    svg = render_svg(fam, points)
    with open(args.svg, "w") as fh:
        fh.write(svg)
    print(f"wrote {args.svg}")
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        lo, hi = args.seeds.split("..")
        seeds = range(int(lo), int(hi) + 1)
    except ValueError:
        print("bad --seeds range, expected A..B", file=sys.stderr)
        return EXIT_INVALID
    algos = ["t1", "t2"] if args.algo == "both" else [args.algo]
    writer = csv.writer(sys.stdout)
    writer.writerow(["seed", "algo", "n", "members", "N0", "points", "bound",
                     "oracle_opt", "verified"])
    rc = EXIT_OK
    for seed in seeds:
        cfg = GenConfig(
            seed=seed, n=args.n, members=args.members,
            spread=Fraction(args.spread), class_mode=getattr(args, "class"),
            repair=args.repair,
        )
        try:
            fam = generate(cfg)
        except GenerationExhausted:
            writer.writerow([seed, "-", args.n, args.members, "", "", "", "", "gen_failed"])
            continue
        opt = ""
        if len(fam.members) <= args.limit:
            opt = optimal_piercing(fam, member_limit=args.limit).optimum
        for algo in algos:
            try:
                result = _pierce(fam, algo)
            except ClaimViolation as exc:
                _write_cex(exc, f"bench-seed{seed}-{algo}")
                writer.writerow([seed, algo, args.n, args.members, "", "", "",
                                 opt, "claim_violation"])
                rc = EXIT_CLAIM
                continue
            ok = verify_piercing(fam, result.points).ok
            if not ok:
                rc = max(rc, EXIT_VERIFY)
            writer.writerow([seed, algo, fam.template.n, len(fam.members),
                             result.initial_type_count, len(result.points),
                             result.bound, opt, ok])
    return rc


def _add_gen_flags(p, with_seed=True):
    if with_seed:
        p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--members", type=int, default=3)
    p.add_argument("--spread", type=str, default="1")
    p.add_argument("--class", choices=["general", "theorem2"], default="general")
    p.add_argument("--repair", choices=["reject", "translate_repair"],
                   default="translate_repair")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polypierce",
        description="Piercing point sets for families of pairwise-intersecting "
                    "convex polygons related to a template n-gon.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a seeded random instance")
    _add_gen_flags(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="validate an instance file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("pierce", help="run a piercing algorithm")
    p.add_argument("file")
    p.add_argument("--algo", choices=["t1", "t2"], required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_pierce)

    p = sub.add_parser("exact", help="exact optimal piercing (oracle)")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=16)
    p.add_argument("--out")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="verify a piercing point set")
    p.add_argument("file")
    p.add_argument("--points", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="render an instance to SVG")
    p.add_argument("file")
    p.add_argument("--points")
    p.add_argument("--svg", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="batch statistics as CSV on stdout")
    p.add_argument("--seeds", required=True, help="seed range A..B")
    _add_gen_flags(p, with_seed=False)
    p.add_argument("--algo", choices=["t1", "t2", "both"], default="both")
    p.add_argument("--limit", type=int, default=12)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
