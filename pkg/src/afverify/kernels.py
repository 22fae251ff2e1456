from __future__ import annotations

from enum import Enum

from afverify.core import ArgumentationFramework, self_loops
from afverify.errors import AFInputError, UnsupportedSemanticsError
from afverify.semantics import SemanticsKind


class KernelKind(str, Enum):
    STB = "k_stb"
    AD = "k_ad"
    GR = "k_gr"
    CO = "k_co"
    NA = "k_na"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> KernelKind:
        """Accept ``k_stb`` as well as the bare ``stb`` spelling."""
        name = text.strip().lower()
        if not name.startswith("k_"):
            name = f"k_{name}"
        try:
            return cls(name)
        except ValueError:
            raise AFInputError("unknown kernel", text) from None


_KERNEL_FOR: dict[SemanticsKind, KernelKind] = {
    SemanticsKind.STB: KernelKind.STB,
    SemanticsKind.STG: KernelKind.STB,
    SemanticsKind.AD: KernelKind.AD,
    SemanticsKind.PR: KernelKind.AD,
    SemanticsKind.ID: KernelKind.AD,
    SemanticsKind.SS: KernelKind.AD,
    SemanticsKind.EG: KernelKind.AD,
    SemanticsKind.CO: KernelKind.CO,
    SemanticsKind.GR: KernelKind.GR,
    SemanticsKind.SAD: KernelKind.GR,
    SemanticsKind.NA: KernelKind.NA,
}

KERNEL_SEMANTICS: tuple[SemanticsKind, ...] = tuple(_KERNEL_FOR)


def _stable_rows(af: ArgumentationFramework, loops: int) -> list[int]:
    rows = list(af.out_masks)
    for i in range(af.n):
        bit = 1 << i
        if loops & bit:
            rows[i] &= bit
    return rows


def _admissible_rows(af: ArgumentationFramework, loops: int) -> list[int]:
    rows = list(af.out_masks)
    for i in range(af.n):
        bit = 1 << i
        if loops & bit:
            rows[i] &= ~((loops | af.in_masks[i]) & ~bit)
    return rows


def _grounded_rows(af: ArgumentationFramework, loops: int) -> list[int]:
    rows = list(af.out_masks)
    for i in range(af.n):
        bit = 1 << i
        drop = 0
        for j in range(af.n):
            target = 1 << j
            if j == i or not rows[i] & target or not loops & target:
                continue
            if loops & bit or af.out_masks[j] & bit:
                drop |= target
        rows[i] &= ~drop
    return rows


def _complete_rows(af: ArgumentationFramework, loops: int) -> list[int]:
    rows = list(af.out_masks)
    for i in range(af.n):
        bit = 1 << i
        if loops & bit:
            rows[i] &= ~(loops & ~bit)
    return rows


def _naive_rows(af: ArgumentationFramework, loops: int) -> list[int]:
    full = af.args.full
    rows = list(af.out_masks)
    for i in range(af.n):
        bit = 1 << i
        added = full if loops & bit else af.in_masks[i] | loops
        rows[i] |= added & ~bit
    return rows


_RULES = {
    KernelKind.STB: _stable_rows,
    KernelKind.AD: _admissible_rows,
    KernelKind.GR: _grounded_rows,
    KernelKind.CO: _complete_rows,
    KernelKind.NA: _naive_rows,
}


def apply_kernel(af: ArgumentationFramework, kind: KernelKind) -> ArgumentationFramework:
    rows = _RULES[KernelKind(kind)](af, self_loops(af))
    return ArgumentationFramework(af.args, tuple(rows))


def kernel_for(kind: SemanticsKind) -> KernelKind:
    kind = SemanticsKind(kind)
    try:
        return _KERNEL_FOR[kind]
    except KeyError:
        raise UnsupportedSemanticsError(kind=kind.value, operation="kernel_for") from None


def kernels_equal(
    first: ArgumentationFramework, second: ArgumentationFramework, kind: KernelKind
) -> bool:
    return apply_kernel(first, kind) == apply_kernel(second, kind)
