from __future__ import annotations

import random

from afverify.core import default_names
from afverify.enumeration import (
    MAX_ENUMERATION_ARGS,
    af_count,
    cached_table,
    enumerate_afs,
    map_bitmasks,
    random_af,
    require_bound,
)
from afverify.errors import AFResourceError


def _popcount(mask: int) -> int:
    return mask.bit_count()


def test_af_count() -> None:
    assert [af_count(n) for n in range(4)] == [1, 2, 16, 512]


def test_enumeration_is_bitmask_ordered() -> None:
    masks = [af.bitmask for af in enumerate_afs(["a", "b"])]
    assert masks == list(range(16))


def test_enumerate_afs_rejects_too_many_arguments() -> None:
    try:
        enumerate_afs(default_names(MAX_ENUMERATION_ARGS + 1))
    except AFResourceError as e:
        assert e.operation == "enumerate_afs"
        assert e.bound == MAX_ENUMERATION_ARGS
        return
    raise AssertionError("Expected AFResourceError")


def test_require_bound() -> None:
    require_bound("op", 4, 4)
    for requested in (-1, 5):
        try:
            require_bound("op", requested, 4)
        except AFResourceError:
            continue
        raise AssertionError(f"Expected AFResourceError for {requested}")


def test_cached_table_is_shared() -> None:
    assert cached_table(("a", "b")) is cached_table(("a", "b"))


def test_map_bitmasks_keeps_order_across_workers() -> None:
    count = af_count(3) * 16
    serial = map_bitmasks(_popcount, count)
    assert map_bitmasks(_popcount, count, threads=2) == serial
    assert serial[:4] == [0, 1, 1, 2]


def test_random_af_is_seeded_and_bounded() -> None:
    names = default_names(5)
    first = random_af(names, 0.4, random.Random(7))
    assert first == random_af(names, 0.4, random.Random(7))
    assert first.names == names
    assert random_af(names, 0.0, random.Random(1)).attack_pairs() == frozenset()
    assert len(random_af(names, 1.0, random.Random(1)).attack_pairs()) == 25
