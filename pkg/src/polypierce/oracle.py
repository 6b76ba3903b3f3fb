"""Ground truth: piercing verification and exact optimal piercing numbers.

A set of members is 1-pierceable iff their joint halfplane system is
feasible, so the minimum piercing number is a minimum cover of the member
set by feasible subsets.  Subset feasibility is decided exactly; in the
plane it reduces to all sub-triples being feasible (Helly), which keeps the
2^m sweep cheap.  The cover is computed by dynamic programming over subset
masks and pruned to a partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import AuditFailure, TooLarge
from .family import Family
from .geometry import Point, canonical_witness, feasible


@dataclass
class VerificationReport:
    ok: bool
    unpierced: list[int]
    per_member_hits: dict[int, list[int]]


@dataclass
class OracleResult:
    optimum: int
    witness_points: list[Point]
    witness_groups: list[list[int]]


def verify_piercing(f: Family, points: list[Point]) -> VerificationReport:
    unpierced = []
    hits: dict[int, list[int]] = {}
    for i, member in enumerate(f.members):
        hits[i] = [k for k, p in enumerate(points) if member.contains(f.template, p)]
        if not hits[i]:
            unpierced.append(i)
    return VerificationReport(ok=not unpierced, unpierced=unpierced,
                              per_member_hits=hits)


def _group_feasible(f: Family, indices) -> bool:
    system = []
    for i in indices:
        system.extend(f.member_halfplanes(i))
    return feasible(system) is not None


def optimal_piercing(f: Family, member_limit: int = 16) -> OracleResult:
    m = len(f.members)
    if m > member_limit:
        raise TooLarge(f"{m} members exceeds oracle limit {member_limit}")

    # Feasibility of every subset of size <= 3; Helly lifts it to all masks.
    small_ok: dict[tuple[int, ...], bool] = {}
    for size in (1, 2, 3):
        for combo in combinations(range(m), size):
            small_ok[combo] = _group_feasible(f, combo)

    def mask_feasible(mask: int) -> bool:
        bits = [i for i in range(m) if mask >> i & 1]
        for size in (1, 2, 3):
            if len(bits) < size:
                break
            for combo in combinations(bits, size):
                if not small_ok[combo]:
                    return False
        return True

    full = (1 << m) - 1
    feas = [False] * (full + 1)
    for mask in range(1, full + 1):
        feas[mask] = mask_feasible(mask)

    INF = m + 1
    dp = [INF] * (full + 1)
    choice = [0] * (full + 1)
    dp[0] = 0
    for mask in range(1, full + 1):
        low = mask & -mask
        sub = mask
        while sub:
            if sub & low and feas[sub] and dp[mask ^ sub] + 1 < dp[mask]:
                dp[mask] = dp[mask ^ sub] + 1
                choice[mask] = sub
            sub = (sub - 1) & mask
    if dp[full] >= INF:
        raise AuditFailure("some single member is empty; family is unpierceable")

    groups = []
    mask = full
    while mask:
        sub = choice[mask]
        groups.append([i for i in range(m) if sub >> i & 1])
        mask ^= sub
    groups.sort()
    witness_points = []
    for g in groups:
        system = []
        for i in g:
            system.extend(f.member_halfplanes(i))
        witness_points.append(canonical_witness(system))
    return OracleResult(optimum=dp[full], witness_points=witness_points,
                        witness_groups=groups)


@dataclass
class AuditRecord:
    points: int
    bound: int
    verified: bool
    oracle_optimum: int | None


def bound_audit(f: Family, result, oracle: OracleResult | None = None) -> AuditRecord:
    """Hard check of a piercing result: bound conformance, soundness, and
    oracle dominance when an oracle result is supplied."""
    k = len(result.points)
    if k > result.bound:
        raise AuditFailure(f"{k} points exceed the bound {result.bound}")
    report = verify_piercing(f, result.points)
    if not report.ok:
        raise AuditFailure(f"members {report.unpierced} are unpierced")
    opt = oracle.optimum if oracle is not None else None
    if opt is not None and opt > k:
        raise AuditFailure(f"oracle optimum {opt} exceeds output size {k}")
    return AuditRecord(points=k, bound=result.bound, verified=True,
                       oracle_optimum=opt)
