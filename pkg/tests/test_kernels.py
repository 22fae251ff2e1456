from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from afverify.core import (
    build_af,
    conflict_free_masks,
    default_names,
    self_loops,
    union_af,
)
from afverify.enumeration import enumerate_afs, random_af
from afverify.errors import AFInputError, UnsupportedSemanticsError
from afverify.kernels import (
    KERNEL_SEMANTICS,
    KernelKind,
    apply_kernel,
    kernel_for,
    kernels_equal,
)
from afverify.semantics import SemanticsKind, extension_masks


def _pairs(text: str) -> frozenset[tuple[str, str]]:
    return frozenset(tuple(edge) for edge in text.split())


def test_naive_kernel_example(naive_f, naive_g) -> None:
    expected = _pairs("bb ab ba bc cb bd db cd dc")
    assert apply_kernel(naive_f, KernelKind.NA).attack_pairs() == expected
    assert apply_kernel(naive_g, KernelKind.NA).attack_pairs() == expected
    assert kernels_equal(naive_f, naive_g, KernelKind.NA)


def test_naive_kernel_symmetrizes_attacks() -> None:
    af = build_af(["a", "b"], [("b", "a")])
    assert apply_kernel(af, KernelKind.NA).attack_pairs() == _pairs("ba ab")


def test_stable_kernel_drops_attacks_of_self_attackers(sta_af) -> None:
    assert apply_kernel(sta_af, KernelKind.STB).attack_pairs() == _pairs("aa bc cb")


@pytest.mark.parametrize("kind", [KernelKind.STB, KernelKind.AD, KernelKind.GR, KernelKind.CO])
def test_loop_free_af_is_its_own_kernel(kind: KernelKind) -> None:
    af = build_af(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a"), ("b", "a")])
    assert apply_kernel(af, kind) == af


def test_kernel_for() -> None:
    assert kernel_for(SemanticsKind.STG) is KernelKind.STB
    assert kernel_for(SemanticsKind.SAD) is KernelKind.GR
    assert kernel_for(SemanticsKind.PR) is KernelKind.AD
    assert kernel_for(SemanticsKind.CO) is KernelKind.CO
    assert kernel_for(SemanticsKind.NA) is KernelKind.NA
    assert SemanticsKind.CF not in KERNEL_SEMANTICS


@pytest.mark.parametrize("kind", [SemanticsKind.STA, SemanticsKind.CF])
def test_kernel_for_unsupported(kind: SemanticsKind) -> None:
    try:
        kernel_for(kind)
    except UnsupportedSemanticsError as e:
        assert e.kind == kind.value
        return
    raise AssertionError("Expected UnsupportedSemanticsError")


def test_kernels_equal(pairs, naive_f) -> None:
    f1, f1_prime = pairs["F1"]
    assert not kernels_equal(f1, f1_prime, KernelKind.CO)
    for kind in KernelKind:
        assert kernels_equal(naive_f, naive_f, kind)


def test_kernel_kind_parse() -> None:
    assert KernelKind.parse("stb") is KernelKind.STB
    assert KernelKind.parse("k_gr") is KernelKind.GR
    assert KernelKind.parse(" CO ") is KernelKind.CO
    try:
        KernelKind.parse("k_pr")
    except AFInputError:
        return
    raise AssertionError("Expected AFInputError")


def _kernel_compatible(kinds: tuple[SemanticsKind, ...], n: int) -> None:
    for af in enumerate_afs(default_names(n)):
        for kind in kinds:
            kernel = apply_kernel(af, kernel_for(kind))
            assert extension_masks(af, kind) == extension_masks(kernel, kind), (kind, af)


def _idempotent(n: int) -> None:
    for af in enumerate_afs(default_names(n)):
        for kind in KernelKind:
            once = apply_kernel(af, kind)
            assert apply_kernel(once, kind) == once, (kind, af)


def test_kernels_keep_extensions_at_three_arguments() -> None:
    _kernel_compatible(KERNEL_SEMANTICS, 3)


def test_kernels_are_idempotent_at_three_arguments() -> None:
    _idempotent(3)


@pytest.mark.slow
def test_kernels_keep_extensions_at_four_arguments() -> None:
    kinds = (SemanticsKind.STB, SemanticsKind.NA, SemanticsKind.GR, SemanticsKind.CO)
    _kernel_compatible(kinds, 4)


@pytest.mark.slow
def test_kernels_are_idempotent_at_four_arguments() -> None:
    _idempotent(4)


def _structure_kept(n: int) -> None:
    for af in enumerate_afs(default_names(n)):
        loops = self_loops(af)
        cf = set(conflict_free_masks(af))
        for kind in KernelKind:
            kernel = apply_kernel(af, kind)
            assert kernel.names == af.names
            assert self_loops(kernel) == loops, (kind, af)
        assert set(conflict_free_masks(apply_kernel(af, KernelKind.GR))) == cf, af
        assert set(conflict_free_masks(apply_kernel(af, KernelKind.NA))) == cf, af


def test_kernels_keep_arguments_loops_and_conflicts() -> None:
    for n in range(1, 4):
        _structure_kept(n)


@pytest.mark.slow
def test_kernels_keep_arguments_loops_and_conflicts_at_four_arguments() -> None:
    _structure_kept(4)


@settings(max_examples=200, deadline=None)
@given(
    st.randoms(use_true_random=False),
    st.sampled_from(list(KernelKind)),
    st.floats(min_value=0.1, max_value=0.7),
)
def test_equal_kernels_stay_equal_under_expansion(
    rng: random.Random, kind: KernelKind, density: float
) -> None:
    af = random_af(["a", "b", "c", "d"], density, rng)
    twin = apply_kernel(af, kind)
    extra = random_af(rng.sample(["a", "b", "c", "d", "e"], 3), density, rng)
    assert kernels_equal(af, twin, kind)
    assert kernels_equal(union_af(af, extra), union_af(twin, extra), kind)
