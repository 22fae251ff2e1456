from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from enum import Enum

from afverify.core import (
    ArgSet,
    ArgumentationFramework,
    ExtensionSet,
    bits,
    characteristic,
    default_names,
    loop_reduct,
    submasks,
)
from afverify.enumeration import DEFAULT_BOUND, enumerate_afs, require_bound
from afverify.errors import AFInternalError
from afverify.models import RationalityReport


class SemanticsKind(str, Enum):
    CF = "cf"
    NA = "na"
    STB = "stb"
    AD = "ad"
    PR = "pr"
    CO = "co"
    GR = "gr"
    SS = "ss"
    STG = "stg"
    ID = "id"
    EG = "eg"
    SAD = "sad"
    STA = "sta"

    def __str__(self) -> str:
        return self.value


# (S, attacked by S, attackers of S) for one conflict-free S.
Profile = tuple[ArgSet, ArgSet, ArgSet]


def cf_profile(af: ArgumentationFramework) -> list[Profile]:
    """Conflict-free sets with their attack neighborhoods, built incrementally."""
    found: list[Profile] = [(0, 0, 0)]
    for i in range(af.n):
        bit = 1 << i
        out_row = af.out_masks[i]
        if out_row & bit:
            continue
        in_row = af.in_masks[i]
        blocked = out_row | in_row
        found.extend(
            [
                (s | bit, hit | out_row, hitters | in_row)
                for s, hit, hitters in found
                if not s & blocked
            ]
        )
    return found


def maximal(masks: Iterable[ArgSet]) -> list[ArgSet]:
    """The subset-maximal members of ``masks``."""
    pool = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[ArgSet] = []
    for m in pool:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return kept


def _range_maximal(profile: list[Profile]) -> list[ArgSet]:
    ranges = {s: s | hit for s, hit, _ in profile}
    top = set(maximal(ranges.values()))
    return [s for s, r in ranges.items() if r in top]


def _admissible(profile: list[Profile]) -> list[Profile]:
    return [p for p in profile if p[2] & ~p[1] == 0]


def _unique_max(masks: list[ArgSet], what: str) -> ArgSet:
    top = maximal(masks)
    if len(top) != 1:
        raise AFInternalError(f"{what} has {len(top)} maximal admissible subsets")
    return top[0]


def _solve_cf(af: ArgumentationFramework) -> list[ArgSet]:
    return [s for s, _, _ in cf_profile(af)]


def _solve_na(af: ArgumentationFramework) -> list[ArgSet]:
    return maximal(_solve_cf(af))


def _solve_stb(af: ArgumentationFramework) -> list[ArgSet]:
    full = af.args.full
    return [s for s, hit, _ in cf_profile(af) if s | hit == full]


def _solve_ad(af: ArgumentationFramework) -> list[ArgSet]:
    return [p[0] for p in _admissible(cf_profile(af))]


def _solve_pr(af: ArgumentationFramework) -> list[ArgSet]:
    return maximal(_solve_ad(af))


def _solve_co(af: ArgumentationFramework) -> list[ArgSet]:
    return [s for s in _solve_ad(af) if characteristic(af, s) & ~s == 0]


def _solve_gr(af: ArgumentationFramework) -> list[ArgSet]:
    return [grounded_fixpoint(af)]


def _solve_ss(af: ArgumentationFramework) -> list[ArgSet]:
    return _range_maximal(_admissible(cf_profile(af)))


def _solve_stg(af: ArgumentationFramework) -> list[ArgSet]:
    return _range_maximal(cf_profile(af))


def _solve_id(af: ArgumentationFramework) -> list[ArgSet]:
    ad = _solve_ad(af)
    common = af.args.full
    for s in maximal(ad):
        common &= s
    return [_unique_max([s for s in ad if s & ~common == 0], "ideal")]


def _solve_eg(af: ArgumentationFramework) -> list[ArgSet]:
    profile = _admissible(cf_profile(af))
    common = af.args.full
    for s in _range_maximal(profile):
        common &= s
    return [_unique_max([p[0] for p in profile if p[0] & ~common == 0], "eager")]


def _solve_sad(af: ArgumentationFramework) -> list[ArgSet]:
    return _closure(af)


def _solve_sta(af: ArgumentationFramework) -> list[ArgSet]:
    profile = cf_profile(af)
    full = af.args.full
    covering = {s for s, hit, hitters in profile if s | hit | hitters == full}
    return [s for s in _range_maximal(profile) if s in covering]


_SOLVERS: dict[SemanticsKind, Callable[[ArgumentationFramework], list[ArgSet]]] = {
    SemanticsKind.CF: _solve_cf,
    SemanticsKind.NA: _solve_na,
    SemanticsKind.STB: _solve_stb,
    SemanticsKind.AD: _solve_ad,
    SemanticsKind.PR: _solve_pr,
    SemanticsKind.CO: _solve_co,
    SemanticsKind.GR: _solve_gr,
    SemanticsKind.SS: _solve_ss,
    SemanticsKind.STG: _solve_stg,
    SemanticsKind.ID: _solve_id,
    SemanticsKind.EG: _solve_eg,
    SemanticsKind.SAD: _solve_sad,
    SemanticsKind.STA: _solve_sta,
}


def extension_masks(af: ArgumentationFramework, kind: SemanticsKind) -> tuple[ArgSet, ...]:
    """Canonically ordered extension masks; the picklable core of :func:`extensions`."""
    return ExtensionSet.of(af.args, _SOLVERS[SemanticsKind(kind)](af)).masks


def extensions(af: ArgumentationFramework, kind: SemanticsKind) -> ExtensionSet:
    return ExtensionSet.of(af.args, _SOLVERS[SemanticsKind(kind)](af))


def grounded_fixpoint(af: ArgumentationFramework) -> ArgSet:
    current = 0
    while True:
        following = characteristic(af, current)
        if following == current:
            return current
        current = following


def _closure(af: ArgumentationFramework) -> list[ArgSet]:
    seen = set(submasks(characteristic(af, 0)))
    frontier = list(seen)
    while frontier:
        grown: list[ArgSet] = []
        for base in frontier:
            for extra in submasks(characteristic(af, base) & ~base):
                candidate = base | extra
                if candidate not in seen:
                    seen.add(candidate)
                    grown.append(candidate)
        frontier = grown
    return list(seen)


def strongly_admissible_sets(af: ArgumentationFramework) -> ExtensionSet:
    return ExtensionSet.of(af.args, _closure(af))


def is_strongly_admissible_recursive(af: ArgumentationFramework, s: ArgSet) -> bool:
    af.args.check(s)
    memo: dict[ArgSet, bool] = {}

    def defended_by(defenders: ArgSet, arg: int) -> bool:
        hit = 0
        for i in bits(defenders):
            hit |= af.out_masks[i]
        return af.in_masks[arg] & ~hit == 0

    def strong(candidate: ArgSet) -> bool:
        if candidate in memo:
            return memo[candidate]
        result = all(
            any(
                defended_by(sub, arg) and strong(sub)
                for sub in submasks(candidate & ~(1 << arg))
            )
            for arg in bits(candidate)
        )
        memo[candidate] = result
        return result

    return strong(s)


def check_rational(
    kind: SemanticsKind,
    n: int,
    *,
    bound: int | None = None,
    logger: logging.Logger | None = None,
) -> RationalityReport:
    """Compare ``kind`` on every AF over ``n`` arguments with its loop-reduct.

    The report carries the least counterexample in enumeration order, if any.
    """
    kind = SemanticsKind(kind)
    require_bound("check_rational", n, DEFAULT_BOUND if bound is None else bound)
    if logger:
        logger.debug("afverify.rational start kind=%s n=%d", kind.value, n)
    checked = 0
    for af in enumerate_afs(default_names(n)):
        checked += 1
        reduct = loop_reduct(af)
        if reduct.out_masks != af.out_masks and extension_masks(af, kind) != extension_masks(
            reduct, kind
        ):
            if logger:
                logger.debug("afverify.rational counterexample kind=%s af=%r", kind.value, af)
            return RationalityReport(kind=kind.value, n=n, checked=checked, counterexample=af)
    if logger:
        logger.debug("afverify.rational done kind=%s n=%d checked=%d", kind.value, n, checked)
    return RationalityReport(kind=kind.value, n=n, checked=checked, counterexample=None)
