from __future__ import annotations

import sys
from pathlib import Path

import pytest


def pytest_configure() -> None:
    # Ensure tests import the in-repo `src/` code (not an old installed wheel).
    repo_root = Path(__file__).resolve().parents[1]
    src = repo_root / "src"
    sys.path.insert(0, str(src))


_ENV_VARS = (
    "AFVERIFY_BOUND",
    "AFVERIFY_THREADS",
    "AFVERIFY_FRESH",
    "AFVERIFY_STRICT",
    "AFVERIFY_DEBUG",
)


@pytest.fixture(autouse=True)
def _clear_afverify_env(monkeypatch: pytest.MonkeyPatch) -> None:
    # Make tests deterministic even if the developer has settings exported.
    for name in _ENV_VARS:
        monkeypatch.delenv(name, raising=False)


def _af(names: str, attacks: str):
    from afverify import build_af

    pairs = [tuple(edge) for edge in attacks.split()]
    return build_af(list(names), pairs)


@pytest.fixture
def make_af():
    """``make_af("abc", "ab bc")`` builds an AF from one-letter names and two-letter attacks."""
    return _af


@pytest.fixture
def naive_f():
    return _af("abcd", "bb dc")


@pytest.fixture
def naive_g():
    return _af("abcd", "bb cd ab bc")


@pytest.fixture
def sad_af():
    return _af("abcdef", "ab bc ce ee ef fe de")


@pytest.fixture
def mixed_af():
    """a and b attack each other, b attacks itself, c attacks b."""
    return _af("abc", "ab ba bb cb")


@pytest.fixture
def sta_af():
    return _af("abc", "aa ab bc cb")


@pytest.fixture
def pairs():
    """Pairs sharing a verification class but not their extensions, keyed by name."""
    return {
        "F1": (_af("ab", "bb ba"), _af("ab", "bb")),
        "F2": (_af("abc", "bb bc cb"), _af("abc", "bb ab cb bc")),
        "F3": (_af("ab", "bb ab ba"), _af("ab", "bb")),
        "F4": (_af("ab", "bb ab ba"), _af("ab", "bb ba")),
        "F5": (_af("ab", "bb ab ba"), _af("ab", "bb ab")),
        "F6": (_af("ab", "bb ab"), _af("ab", "bb ba")),
        "F7": (_af("abc", "cc ab ba bc"), _af("abc", "cc ab ba")),
    }
