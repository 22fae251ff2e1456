from __future__ import annotations

from dataclasses import dataclass

from afverify.core import ArgSet, ArgumentationFramework, ArgumentTable, canonical_key
from afverify.semantics import Profile, cf_profile
from afverify.verification.neighborhood import NeighborhoodFn, eval_basic

Row = tuple[ArgSet, tuple[ArgSet, ...]]


@dataclass(frozen=True, slots=True)
class VerificationClass:
    """One ``(S, images)`` row per conflict-free S, in canonical order of S.

    Images follow the basics of ``fn.rep_basics`` and include S itself, since
    they are taken over range and anti-range.
    """

    fn: NeighborhoodFn
    args: ArgumentTable
    rows: tuple[Row, ...]

    @property
    def sets(self) -> tuple[ArgSet, ...]:
        return tuple(s for s, _ in self.rows)

    def image(self, s: ArgSet) -> tuple[ArgSet, ...]:
        for member, images in self.rows:
            if member == s:
                return images
        raise KeyError(s)


def class_rows(profile: list[Profile], fn: NeighborhoodFn) -> tuple[Row, ...]:
    basics = fn.rep_basics
    rows = []
    for s, hit, hitters in profile:
        plus, minus = s | hit, s | hitters
        rows.append((s, tuple(eval_basic(b, plus, minus) for b in basics)))
    rows.sort(key=lambda row: canonical_key(row[0]))
    return tuple(rows)


def verification_class(af: ArgumentationFramework, x: NeighborhoodFn) -> VerificationClass:
    return VerificationClass(x, af.args, class_rows(cf_profile(af), x))


def format_class(vclass: VerificationClass) -> str:
    """``[S] | [image] | ...`` rows with names sorted, one per conflict-free set."""
    names = vclass.args.names_of

    def show(mask: ArgSet) -> str:
        return "[" + ",".join(sorted(names(mask))) + "]"

    return "".join(
        " | ".join([show(s), *(show(image) for image in images)]) + "\n"
        for s, images in vclass.rows
    )
