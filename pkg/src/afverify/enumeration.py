from __future__ import annotations

import random
from collections.abc import Callable, Iterator, Sequence
from functools import lru_cache
from typing import TypeVar

from joblib import Parallel, delayed

from afverify.core import ArgumentationFramework, ArgumentTable
from afverify.errors import AFResourceError

DEFAULT_BOUND = 4
DEFAULT_FRESH = 1
MAX_ENUMERATION_ARGS = 5

# Below this many items a worker pool costs more than it saves.
_PARALLEL_MIN_ITEMS = 4096

T = TypeVar("T")


def require_bound(operation: str, requested: int, bound: int) -> None:
    if requested < 0 or requested > bound:
        raise AFResourceError(operation=operation, requested=requested, bound=bound)


@lru_cache(maxsize=16)
def cached_table(names: tuple[str, ...]) -> ArgumentTable:
    """Shared table for the many AFs decoded over one argument tuple."""
    return ArgumentTable(names)


def af_count(n: int) -> int:
    return 1 << (n * n)


def enumerate_afs(arg_names: Sequence[str]) -> Iterator[ArgumentationFramework]:
    """Every AF over ``arg_names``, attack-relation bitmask ascending."""
    table = ArgumentTable(tuple(dict.fromkeys(arg_names)))
    require_bound("enumerate_afs", len(table), MAX_ENUMERATION_ARGS)
    return (
        ArgumentationFramework.from_bitmask(table, mask) for mask in range(af_count(len(table)))
    )


def _apply_range(fn: Callable[[int], T], start: int, stop: int) -> list[T]:
    return [fn(mask) for mask in range(start, stop)]


def map_bitmasks(fn: Callable[[int], T], count: int, *, threads: int = 1) -> list[T]:
    """``[fn(m) for m in range(count)]``, optionally split across joblib workers.

    ``fn`` must be picklable and return picklable values; chunks are concatenated
    in order, so results never depend on scheduling.
    """
    if threads <= 1 or count < _PARALLEL_MIN_ITEMS:
        return _apply_range(fn, 0, count)
    step = -(-count // (threads * 4))
    chunks = [(start, min(start + step, count)) for start in range(0, count, step)]
    parts = Parallel(n_jobs=threads)(
        delayed(_apply_range)(fn, start, stop) for start, stop in chunks
    )
    return [item for part in parts for item in part]


def random_af(
    arg_names: Sequence[str], density: float = 0.3, rng: random.Random | None = None
) -> ArgumentationFramework:
    """An AF where each ordered pair (self-attacks included) is an attack with ``density``."""
    rng = rng or random.Random()
    table = ArgumentTable(tuple(dict.fromkeys(arg_names)))
    n = len(table)
    pairs = [(i, j) for i in range(n) for j in range(n) if rng.random() < density]
    return ArgumentationFramework.from_pairs(table, pairs)
