from __future__ import annotations

import hashlib
import logging
from functools import partial
from typing import NamedTuple

import numpy as np

from afverify.core import ArgumentationFramework, default_names, restrict_args, union_af
from afverify.enumeration import (
    DEFAULT_BOUND,
    DEFAULT_FRESH,
    af_count,
    cached_table,
    enumerate_afs,
    map_bitmasks,
    require_bound,
)
from afverify.errors import AFResourceError, UnsupportedSemanticsError
from afverify.kernels import KernelKind, apply_kernel, kernel_for, kernels_equal
from afverify.models import EquivalenceVerdict, ExpansionViolation, KernelAgreementReport
from afverify.semantics import SemanticsKind, extension_masks, extensions

__all__ = [
    "INTERMEDIATE_BRACKETS",
    "Bracket",
    "check_intermediate_theorem",
    "enumerate_afs",
    "expansion_equivalent",
    "find_bracket_violation",
    "find_expansion_counterexample",
    "is_intermediate",
    "kernel_oracle_agreement",
    "standard_equivalent",
]

MAX_FRESH = 2


class Bracket(NamedTuple):
    lower: SemanticsKind
    upper: SemanticsKind
    fn: str
    kernel: KernelKind


_STABLE_STAGE = (SemanticsKind.STB, SemanticsKind.STG, "+", KernelKind.STB)

INTERMEDIATE_BRACKETS: dict[SemanticsKind, Bracket] = {
    SemanticsKind.STG: Bracket(*_STABLE_STAGE),
    SemanticsKind.STA: Bracket(*_STABLE_STAGE),
    SemanticsKind.PR: Bracket(SemanticsKind.PR, SemanticsKind.AD, "+∓", KernelKind.AD),
    SemanticsKind.ID: Bracket(SemanticsKind.ID, SemanticsKind.AD, "+∓", KernelKind.AD),
    SemanticsKind.SS: Bracket(SemanticsKind.SS, SemanticsKind.AD, "+∓", KernelKind.AD),
    SemanticsKind.EG: Bracket(SemanticsKind.EG, SemanticsKind.AD, "+∓", KernelKind.AD),
    SemanticsKind.SAD: Bracket(SemanticsKind.GR, SemanticsKind.SAD, "-±", KernelKind.GR),
}


def standard_equivalent(
    first: ArgumentationFramework, second: ArgumentationFramework, kind: SemanticsKind
) -> bool:
    return extensions(first, kind) == extensions(second, kind)


def expansion_equivalent(
    first: ArgumentationFramework, second: ArgumentationFramework, kind: SemanticsKind
) -> EquivalenceVerdict:
    kind = SemanticsKind(kind)
    return EquivalenceVerdict(
        kind=kind.value,
        equivalent=kernels_equal(first, second, kernel_for(kind)),
        method="kernel",
    )


def _fresh_names(taken: list[str], count: int) -> list[str]:
    names: list[str] = []
    index = 0
    while len(names) < count:
        candidate = f"z{index}"
        if candidate not in taken:
            names.append(candidate)
        index += 1
    return names


def _check_fresh(operation: str, fresh: int) -> None:
    if fresh < 0 or fresh > MAX_FRESH:
        raise AFResourceError(
            operation=f"{operation} (fresh arguments)", requested=fresh, bound=MAX_FRESH
        )


def find_expansion_counterexample(
    first: ArgumentationFramework,
    second: ArgumentationFramework,
    kind: SemanticsKind,
    fresh: int = DEFAULT_FRESH,
    *,
    bound: int | None = None,
    logger: logging.Logger | None = None,
) -> ArgumentationFramework | None:
    """Least H with ``kind(first ∪ H) != kind(second ∪ H)``.

    H ranges over the shared arguments plus 0..``fresh`` new ones, fewer new
    arguments first, then by attack bitmask.
    """
    kind = SemanticsKind(kind)
    _check_fresh("find_expansion_counterexample", fresh)
    base = list(dict.fromkeys([*first.names, *second.names]))
    bound = DEFAULT_BOUND if bound is None else bound
    require_bound("find_expansion_counterexample", len(base) + fresh, bound)
    extra = _fresh_names(base, fresh)
    for added in range(fresh + 1):
        names = tuple(base + extra[:added])
        left, right = restrict_args(first, names), restrict_args(second, names)
        if logger:
            logger.debug(
                "afverify.expansion scan kind=%s args=%d expansions=%d",
                kind.value,
                len(names),
                af_count(len(names)),
            )
        for h in enumerate_afs(names):
            if extension_masks(union_af(left, h), kind) != extension_masks(
                union_af(right, h), kind
            ):
                return h
    return None


def _extension_key(kind: str, names: tuple[str, ...], mask: int) -> tuple[int, ...]:
    af = ArgumentationFramework.from_bitmask(cached_table(names), mask)
    return extension_masks(af, SemanticsKind(kind))


def _value_table(kind: SemanticsKind, names: tuple[str, ...], threads: int) -> np.ndarray:
    """Interned extension-set id of every AF over ``names``, indexed by attack bitmask."""
    keys = map_bitmasks(
        partial(_extension_key, kind.value, names), af_count(len(names)), threads=threads
    )
    ids: dict[tuple[int, ...], int] = {}
    return np.fromiter(
        (ids.setdefault(key, len(ids)) for key in keys), dtype=np.int32, count=len(keys)
    )


def _embedding(n: int, m: int) -> np.ndarray:
    """Re-encode every attack bitmask over ``n`` arguments in the ``m``-argument layout."""
    source = np.arange(af_count(n), dtype=np.int64)
    target = np.zeros_like(source)
    for i in range(n):
        for j in range(n):
            target |= ((source >> (i * n + j)) & 1) << (i * m + j)
    return target


class _ExpansionTable:
    """One row per AF over ``n`` arguments: its value under every expansion H.

    Segment ``k`` of a row covers H over the ``n`` arguments plus ``k`` new ones.
    """

    def __init__(self, kind: SemanticsKind, n: int, fresh: int, threads: int) -> None:
        self.names = default_names(n + fresh)
        self.n = n
        self.values = [
            _value_table(kind, self.names[: n + k], threads) for k in range(fresh + 1)
        ]
        self.embeddings = [_embedding(n, n + k) for k in range(fresh + 1)]
        self.expansions = [np.arange(af_count(n + k), dtype=np.int64) for k in range(fresh + 1)]

    @property
    def width(self) -> int:
        return sum(len(h) for h in self.expansions)

    def row(self, mask: int) -> np.ndarray:
        return np.concatenate(
            [
                values[embed[mask] | hs]
                for values, embed, hs in zip(self.values, self.embeddings, self.expansions)
            ]
        )

    def digest(self, mask: int) -> bytes:
        return hashlib.blake2b(self.row(mask).tobytes(), digest_size=16).digest()

    def witness(self, first: int, second: int) -> ArgumentationFramework:
        position = int(np.flatnonzero(self.row(first) != self.row(second))[0])
        for k, hs in enumerate(self.expansions):
            if position < len(hs):
                table = cached_table(self.names[: self.n + k])
                return ArgumentationFramework.from_bitmask(table, position)
            position -= len(hs)
        raise IndexError(position)


def _least_split(labels: list[object], values: list[object]) -> tuple[int, int] | None:
    """Least (i, j), i < j, with equal ``labels`` but different ``values``.

    The least pair always starts at the first member of its label group.
    """
    firsts: dict[object, int] = {}
    pairs: dict[object, tuple[int, int]] = {}
    for index, label in enumerate(labels):
        first = firsts.setdefault(label, index)
        if label not in pairs and values[first] != values[index]:
            pairs[label] = (first, index)
    return min(pairs.values(), default=None)


def kernel_oracle_agreement(
    kind: SemanticsKind,
    n: int,
    *,
    kernel: KernelKind | None = None,
    fresh: int = DEFAULT_FRESH,
    bound: int | None = None,
    threads: int = 1,
    logger: logging.Logger | None = None,
) -> KernelAgreementReport:
    """Compare kernel equality with the bounded expansion oracle on all AF pairs over ``n``."""
    kind = SemanticsKind(kind)
    kernel = kernel_for(kind) if kernel is None else KernelKind(kernel)
    _check_fresh("kernel_oracle_agreement", fresh)
    require_bound("kernel_oracle_agreement", n + fresh, DEFAULT_BOUND if bound is None else bound)
    if logger:
        logger.debug(
            "afverify.agreement start kind=%s kernel=%s n=%d fresh=%d",
            kind.value,
            kernel.value,
            n,
            fresh,
        )
    oracle = _ExpansionTable(kind, n, fresh, threads)
    table = cached_table(default_names(n))
    count = af_count(n)
    digests = [oracle.digest(mask) for mask in range(count)]
    kernels = [
        apply_kernel(ArgumentationFramework.from_bitmask(table, mask), kernel).bitmask
        for mask in range(count)
    ]

    def decode(mask: int) -> ArgumentationFramework:
        return ArgumentationFramework.from_bitmask(table, mask)

    soundness = None
    split = _least_split(kernels, digests)
    if split is not None:
        soundness = ExpansionViolation(
            left=decode(split[0]), right=decode(split[1]), witness=oracle.witness(*split)
        )
    completeness = None
    gap = _least_split(digests, kernels)
    if gap is not None:
        completeness = ExpansionViolation(left=decode(gap[0]), right=decode(gap[1]))
    report = KernelAgreementReport(
        kind=kind.value,
        kernel=kernel.value,
        n=n,
        fresh=fresh,
        frameworks=count,
        expansions=oracle.width,
        soundness_violation=soundness,
        completeness_gap=completeness,
    )
    if logger:
        logger.debug(
            "afverify.agreement done kind=%s agrees=%s sound=%s complete=%s",
            kind.value,
            report.agrees,
            soundness is None,
            completeness is None,
        )
    return report


def check_intermediate_theorem(
    kind: SemanticsKind,
    n: int,
    *,
    fresh: int = DEFAULT_FRESH,
    bound: int | None = None,
    threads: int = 1,
    logger: logging.Logger | None = None,
) -> KernelAgreementReport:
    """Kernel agreement for ``kind`` under the kernel of its bracketing semantics.

    The report is falsy when two AFs share a kernel yet some expansion separates them.
    A completeness gap leaves it truthy. For sta the stable kernel is expected to fail.
    """
    kind = SemanticsKind(kind)
    try:
        bracket = INTERMEDIATE_BRACKETS[kind]
    except KeyError:
        raise UnsupportedSemanticsError(
            kind=kind.value, operation="check_intermediate_theorem"
        ) from None
    return kernel_oracle_agreement(
        kind,
        n,
        kernel=bracket.kernel,
        fresh=fresh,
        bound=bound,
        threads=threads,
        logger=logger,
    )


def _first_outside(
    kind: SemanticsKind,
    lower: SemanticsKind,
    upper: SemanticsKind,
    n: int,
    operation: str,
    bound: int | None,
) -> ArgumentationFramework | None:
    require_bound(operation, n, DEFAULT_BOUND if bound is None else bound)
    for af in enumerate_afs(default_names(n)):
        middle = set(extension_masks(af, kind))
        if not set(extension_masks(af, lower)) <= middle <= set(extension_masks(af, upper)):
            return af
    return None


def is_intermediate(
    kind: SemanticsKind,
    lower: SemanticsKind,
    upper: SemanticsKind,
    n: int,
    *,
    bound: int | None = None,
) -> bool:
    """``lower(F) ⊆ kind(F) ⊆ upper(F)`` for every AF over ``n`` arguments."""
    found = _first_outside(
        SemanticsKind(kind),
        SemanticsKind(lower),
        SemanticsKind(upper),
        n,
        "is_intermediate",
        bound,
    )
    return found is None


def find_bracket_violation(
    kind: SemanticsKind, n: int, *, bound: int | None = None
) -> ArgumentationFramework | None:
    """First AF over ``n`` arguments where ``kind`` leaves its bracket, if any."""
    kind = SemanticsKind(kind)
    try:
        bracket = INTERMEDIATE_BRACKETS[kind]
    except KeyError:
        raise UnsupportedSemanticsError(
            kind=kind.value, operation="find_bracket_violation"
        ) from None
    return _first_outside(
        kind, bracket.lower, bracket.upper, n, "find_bracket_violation", bound
    )
