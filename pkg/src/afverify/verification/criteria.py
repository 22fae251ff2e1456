"""Semantics recomputed from a verification class alone."""

from __future__ import annotations

from collections.abc import Callable

from afverify.core import ArgSet, ExtensionSet
from afverify.errors import AFInternalError, ClassMismatchError, UnsupportedSemanticsError
from afverify.semantics import SemanticsKind, maximal
from afverify.verification.classes import Row, VerificationClass

EXACT_CLASSES: dict[SemanticsKind, str] = {
    SemanticsKind.NA: "ε",
    SemanticsKind.STB: "+",
    SemanticsKind.STG: "+",
    SemanticsKind.AD: "∓",
    SemanticsKind.PR: "∓",
    SemanticsKind.ID: "∓",
    SemanticsKind.SS: "+∓",
    SemanticsKind.EG: "+∓",
    SemanticsKind.GR: "-±",
    SemanticsKind.SAD: "-±",
    SemanticsKind.CO: "+-",
}


def _only(masks: list[ArgSet], what: str) -> ArgSet:
    top = maximal(masks)
    if len(top) != 1:
        raise AFInternalError(f"{what} criterion produced {len(top)} maximal sets")
    return top[0]


def _na(rows: tuple[Row, ...], full: ArgSet) -> list[ArgSet]:
    return maximal(s for s, _ in rows)


def _stb(rows: tuple[Row, ...], full: ArgSet) -> list[ArgSet]:
    return [s for s, (plus,) in rows if plus == full]


def _stg(rows: tuple[Row, ...], full: ArgSet) -> list[ArgSet]:
    top = set(maximal(plus for _, (plus,) in rows))
    return [s for s, (plus,) in rows if plus in top]


def _ad(rows: tuple[Row, ...], full: ArgSet) -> list[ArgSet]:
    return [s for s, (unanswered,) in rows if not unanswered]


def _pr(rows: tuple[Row, ...], full: ArgSet) -> list[ArgSet]:
    return maximal(_ad(rows, full))


def _id(rows: tuple[Row, ...], full: ArgSet) -> list[ArgSet]:
    admissible = _ad(rows, full)
    common = full
    for s in maximal(admissible):
        common &= s
    return [_only([s for s in admissible if s & ~common == 0], "ideal")]


def _ss(rows: tuple[Row, ...], full: ArgSet) -> list[ArgSet]:
    admissible = {s: plus for s, (plus, unanswered) in rows if not unanswered}
    top = set(maximal(admissible.values()))
    return [s for s, plus in admissible.items() if plus in top]


def _eg(rows: tuple[Row, ...], full: ArgSet) -> list[ArgSet]:
    common = full
    for s in _ss(rows, full):
        common &= s
    admissible = [s for s, (_, unanswered) in rows if not unanswered]
    return [_only([s for s in admissible if s & ~common == 0], "eager")]


def _sad(rows: tuple[Row, ...], full: ArgSet) -> list[ArgSet]:
    # Rows come smallest first. A reached S is admissible, so the arguments it
    # attacks are its (P \ M) image together with its own attackers.
    reached: list[tuple[ArgSet, ArgSet]] = []
    for t, (minus, plus_only) in rows:
        attackers = minus & ~t
        if t == 0 or any(
            s & ~t == 0 and s != t and attackers & ~hit == 0 for s, hit in reached
        ):
            reached.append((t, plus_only | attackers))
    return [s for s, _ in reached]


def _gr(rows: tuple[Row, ...], full: ArgSet) -> list[ArgSet]:
    return [_only(_sad(rows, full), "grounded")]


def _co(rows: tuple[Row, ...], full: ArgSet) -> list[ArgSet]:
    attackers = {s: minus & ~s for s, (_, minus) in rows}
    result = []
    for s, (plus, minus) in rows:
        if minus & ~plus:
            continue
        attacked = plus & ~s
        if not any(
            t & s == s and t != s and attackers[t] & ~attacked == 0 for t in attackers
        ):
            result.append(s)
    return result


_CRITERIA: dict[SemanticsKind, Callable[[tuple[Row, ...], ArgSet], list[ArgSet]]] = {
    SemanticsKind.NA: _na,
    SemanticsKind.STB: _stb,
    SemanticsKind.STG: _stg,
    SemanticsKind.AD: _ad,
    SemanticsKind.PR: _pr,
    SemanticsKind.ID: _id,
    SemanticsKind.SS: _ss,
    SemanticsKind.EG: _eg,
    SemanticsKind.GR: _gr,
    SemanticsKind.SAD: _sad,
    SemanticsKind.CO: _co,
}


def exact_class(kind: SemanticsKind) -> str:
    kind = SemanticsKind(kind)
    try:
        return EXACT_CLASSES[kind]
    except KeyError:
        raise UnsupportedSemanticsError(kind=kind.value, operation="gamma") from None


def gamma(kind: SemanticsKind, vclass: VerificationClass, full: ArgSet) -> ExtensionSet:
    """Extensions of ``kind`` computed from ``vclass`` and the argument set ``full``."""
    kind = SemanticsKind(kind)
    expected = exact_class(kind)
    if vclass.fn.representative != expected:
        raise ClassMismatchError(kind=kind.value, expected=expected, got=vclass.fn.representative)
    vclass.args.check(full)
    return ExtensionSet.of(vclass.args, _CRITERIA[kind](vclass.rows, full))
