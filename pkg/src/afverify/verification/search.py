from __future__ import annotations

import logging
from functools import lru_cache, partial

from afverify.core import ArgumentationFramework, default_names
from afverify.enumeration import (
    DEFAULT_BOUND,
    af_count,
    cached_table,
    map_bitmasks,
    require_bound,
)
from afverify.models import VerifiabilityCounterexample
from afverify.semantics import SemanticsKind, cf_profile, extension_masks, extensions
from afverify.verification.classes import class_rows
from afverify.verification.lattice import minimal_elements
from afverify.verification.neighborhood import REPRESENTATIVES, NeighborhoodFn, representative

Pair = tuple[int, int]


@lru_cache(maxsize=None)
def _fn(label: str) -> NeighborhoodFn:
    return representative(label)


Summary = tuple[tuple[int, ...], tuple[object, ...]]


def _summarize(kind: str, names: tuple[str, ...], labels: tuple[str, ...], mask: int) -> Summary:
    af = ArgumentationFramework.from_bitmask(cached_table(names), mask)
    profile = cf_profile(af)
    keys = tuple(class_rows(profile, _fn(label)) for label in labels)
    return extension_masks(af, SemanticsKind(kind)), keys


def _scan(
    kind: SemanticsKind, n: int, labels: tuple[str, ...], threads: int
) -> dict[str, Pair | None]:
    """Least separating pair per lattice node, grouping all AFs over ``n`` arguments by class."""
    names = default_names(n)
    summaries = map_bitmasks(
        partial(_summarize, kind.value, names, labels), af_count(n), threads=threads
    )
    result: dict[str, Pair | None] = {}
    for index, label in enumerate(labels):
        # key -> [first mask, its extensions, least mask with other extensions]
        groups: dict[object, list] = {}
        for mask, (ext, keys) in enumerate(summaries):
            group = groups.setdefault(keys[index], [mask, ext, None])
            if group[2] is None and group[1] != ext:
                group[2] = mask
        pairs = [(first, other) for first, _, other in groups.values() if other is not None]
        result[label] = min(pairs) if pairs else None
    return result


def _report(
    kind: SemanticsKind, fn: NeighborhoodFn, n: int, pair: Pair
) -> VerifiabilityCounterexample:
    table = cached_table(default_names(n))
    left = ArgumentationFramework.from_bitmask(table, pair[0])
    right = ArgumentationFramework.from_bitmask(table, pair[1])
    return VerifiabilityCounterexample(
        kind=kind.value,
        fn=fn.label,
        left=left,
        right=right,
        left_extensions=extensions(left, kind).sorted_names(),
        right_extensions=extensions(right, kind).sorted_names(),
    )


def find_verifiability_counterexample(
    kind: SemanticsKind,
    x: NeighborhoodFn,
    n: int,
    *,
    bound: int | None = None,
    threads: int = 1,
    logger: logging.Logger | None = None,
) -> VerifiabilityCounterexample | None:
    kind = SemanticsKind(kind)
    bound = DEFAULT_BOUND if bound is None else bound
    require_bound("find_verifiability_counterexample", n, bound)
    if logger:
        logger.debug(
            "afverify.search start kind=%s fn=%s n=%d afs=%d", kind.value, x.label, n, af_count(n)
        )
    pair = _scan(kind, n, (x.representative,), threads)[x.representative]
    if logger:
        logger.debug("afverify.search done kind=%s fn=%s found=%s", kind.value, x.label, pair)
    return None if pair is None else _report(kind, x, n, pair)


def refutations(
    kind: SemanticsKind,
    n: int,
    *,
    bound: int | None = None,
    threads: int = 1,
    logger: logging.Logger | None = None,
) -> dict[str, VerifiabilityCounterexample | None]:
    """For every lattice node, the smallest counterexample over 1..n arguments, if any."""
    kind = SemanticsKind(kind)
    require_bound("minimal_classes", n, DEFAULT_BOUND if bound is None else bound)
    labels = tuple(REPRESENTATIVES)
    found: dict[str, VerifiabilityCounterexample | None] = dict.fromkeys(labels)
    for size in range(1, n + 1):
        open_labels = tuple(label for label in labels if found[label] is None)
        if not open_labels:
            break
        if logger:
            logger.debug(
                "afverify.search start kind=%s n=%d open=%d", kind.value, size, len(open_labels)
            )
        for label, pair in _scan(kind, size, open_labels, threads).items():
            if pair is not None:
                found[label] = _report(kind, representative(label), size, pair)
    if logger:
        refuted = sum(1 for report in found.values() if report is not None)
        logger.debug("afverify.search done kind=%s n=%d refuted=%d", kind.value, n, refuted)
    return found


def minimal_classes(
    kind: SemanticsKind,
    n: int,
    *,
    bound: int | None = None,
    threads: int = 1,
    logger: logging.Logger | None = None,
) -> list[NeighborhoodFn]:
    """⪯-minimal lattice nodes with no counterexample up to ``n`` arguments.

    Bounded evidence only: a larger ``n`` may still refute a returned node.
    """
    found = refutations(kind, n, bound=bound, threads=threads, logger=logger)
    return minimal_elements(
        representative(label) for label, report in found.items() if report is None
    )
