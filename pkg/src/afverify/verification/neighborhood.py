from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum

from afverify.core import ArgSet
from afverify.errors import AFInputError


class BasicFn(str, Enum):
    """The eight basic neighborhood functions, valued by their CLI spelling."""

    EPS = "eps"
    PLUS = "p"
    MINUS = "m"
    MINUS_PLUS = "mp"
    PLUS_MINUS = "pm"
    CAP = "cap"
    CUP = "cup"
    DELTA = "delta"

    def __str__(self) -> str:
        return self.value

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    BasicFn.EPS: "ε",
    BasicFn.PLUS: "+",
    BasicFn.MINUS: "-",
    BasicFn.MINUS_PLUS: "∓",
    BasicFn.PLUS_MINUS: "±",
    BasicFn.CAP: "∩",
    BasicFn.CUP: "∪",
    BasicFn.DELTA: "Δ",
}


def eval_basic(basic: BasicFn, plus: ArgSet, minus: ArgSet) -> ArgSet:
    """Apply ``basic`` to a (range, anti-range) pair."""
    if basic is BasicFn.EPS:
        return 0
    if basic is BasicFn.PLUS:
        return plus
    if basic is BasicFn.MINUS:
        return minus
    if basic is BasicFn.MINUS_PLUS:
        return minus & ~plus
    if basic is BasicFn.PLUS_MINUS:
        return plus & ~minus
    if basic is BasicFn.CAP:
        return plus & minus
    if basic is BasicFn.CUP:
        return plus | minus
    return plus ^ minus


_B = BasicFn

# Lattice nodes, keyed by label, valued by the basics whose images a class stores.
REPRESENTATIVES: dict[str, tuple[BasicFn, ...]] = {
    "ε": (_B.EPS,),
    "+": (_B.PLUS,),
    "±": (_B.PLUS_MINUS,),
    "∩": (_B.CAP,),
    "Δ": (_B.DELTA,),
    "∪": (_B.CUP,),
    "∓": (_B.MINUS_PLUS,),
    "-": (_B.MINUS,),
    "+±": (_B.PLUS, _B.PLUS_MINUS),
    "+∓": (_B.PLUS, _B.MINUS_PLUS),
    "±∓": (_B.PLUS_MINUS, _B.MINUS_PLUS),
    "∩∪": (_B.CAP, _B.CUP),
    "-±": (_B.MINUS, _B.PLUS_MINUS),
    "-∓": (_B.MINUS, _B.MINUS_PLUS),
    "+-": (_B.PLUS, _B.MINUS),
}

TOP = "+-"
BOTTOM = "ε"
LEVEL_ONE = tuple(
    label for label, basics in REPRESENTATIVES.items() if len(basics) == 1 and label != BOTTOM
)

# Each pair node with the three basics any two of which carry its information.
_PAIR_GROUPS: dict[str, tuple[BasicFn, ...]] = {
    "+±": (_B.PLUS, _B.PLUS_MINUS, _B.CAP),
    "+∓": (_B.PLUS, _B.MINUS_PLUS, _B.CUP),
    "±∓": (_B.PLUS_MINUS, _B.MINUS_PLUS, _B.DELTA),
    "∩∪": (_B.CAP, _B.CUP, _B.DELTA),
    "-±": (_B.MINUS, _B.PLUS_MINUS, _B.CUP),
    "-∓": (_B.MINUS, _B.MINUS_PLUS, _B.CAP),
    "+-": (_B.PLUS, _B.MINUS, _B.DELTA),
}

PAIR_TABLE: dict[frozenset[BasicFn], str] = {
    frozenset({first, second}): label
    for label, group in _PAIR_GROUPS.items()
    for index, first in enumerate(group)
    for second in group[index + 1 :]
}

# Level-one basics below each pair node; the top node sits above every basic.
_BELOW: dict[str, frozenset[BasicFn]] = {
    label: frozenset(group) for label, group in _PAIR_GROUPS.items() if label != TOP
}


@dataclass(frozen=True, slots=True)
class NeighborhoodFn:
    """A combination of basics, compared by the lattice node it is equivalent to."""

    basics: frozenset[BasicFn] = field(compare=False)
    representative: str

    @property
    def label(self) -> str:
        return self.representative

    @property
    def rep_basics(self) -> tuple[BasicFn, ...]:
        return REPRESENTATIVES[self.representative]

    @property
    def arity(self) -> int:
        return len(self.rep_basics)

    @property
    def cli_name(self) -> str:
        return ",".join(b.value for b in self.rep_basics)

    def __str__(self) -> str:
        return self.representative


def _node_of(basic: BasicFn) -> str:
    return basic.symbol


def _merge(left: str, right: str) -> str:
    if left == right:
        return left
    if len(REPRESENTATIVES[left]) == 1 and len(REPRESENTATIVES[right]) == 1:
        return PAIR_TABLE[frozenset({REPRESENTATIVES[left][0], REPRESENTATIVES[right][0]})]
    if left == TOP or right == TOP:
        return TOP
    for pair, single in ((left, right), (right, left)):
        if len(REPRESENTATIVES[single]) == 1 and REPRESENTATIVES[single][0] in _BELOW[pair]:
            return pair
    return TOP


def canonicalize(basics: Iterable[BasicFn]) -> NeighborhoodFn:
    """Fold ``basics`` into their lattice node, merging left to right."""
    items = list(dict.fromkeys(BasicFn(b) for b in basics if BasicFn(b) is not BasicFn.EPS))
    if not items:
        return NeighborhoodFn(frozenset({BasicFn.EPS}), BOTTOM)
    node = _node_of(items[0])
    for basic in items[1:]:
        node = _merge(node, _node_of(basic))
    return NeighborhoodFn(frozenset(items), node)


def representative(label: str) -> NeighborhoodFn:
    """The canonical function of a lattice node."""
    try:
        basics = REPRESENTATIVES[label]
    except KeyError:
        raise AFInputError("unknown lattice node", label) from None
    return canonicalize(basics)


def parse_neighborhood(text: str) -> NeighborhoodFn:
    """Parse a comma-separated CLI name such as ``p,mp``, or a lattice label such as ``+∓``."""
    if text in REPRESENTATIVES:
        return representative(text)
    parts = [part.strip().lower() for part in text.split(",") if part.strip()]
    if not parts:
        raise AFInputError("empty neighborhood function")
    try:
        return canonicalize(BasicFn(part) for part in parts)
    except ValueError:
        raise AFInputError("unknown neighborhood function", text) from None
