from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType

from afverify.errors import AFInputError

# Bit i set <=> argument id i is a member. Python ints have no width limit.
ArgSet = int


def bits(mask: ArgSet) -> Iterator[int]:
    """Yield member ids of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: ArgSet) -> Iterator[ArgSet]:
    """Yield every subset of ``mask``, ``mask`` itself first and ``0`` last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def canonical_key(mask: ArgSet) -> tuple[int, tuple[int, ...]]:
    return mask.bit_count(), tuple(bits(mask))


def default_names(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(chr(ord("a") + i) for i in range(n))
    return tuple(f"a{i}" for i in range(n))


@dataclass(frozen=True, slots=True)
class ArgumentTable:
    names: tuple[str, ...]
    index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index = {name: i for i, name in enumerate(self.names)}
        if len(index) != len(self.names):
            raise AFInputError("duplicate argument names", self.names)
        object.__setattr__(self, "index", MappingProxyType(index))

    def __len__(self) -> int:
        return len(self.names)

    @property
    def full(self) -> ArgSet:
        return (1 << len(self.names)) - 1

    def id_of(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise AFInputError("unknown argument", name) from None

    def mask_of(self, names: Iterable[str]) -> ArgSet:
        mask = 0
        for name in names:
            mask |= 1 << self.id_of(name)
        return mask

    def names_of(self, mask: ArgSet) -> tuple[str, ...]:
        return tuple(self.names[i] for i in bits(mask))

    def check(self, mask: ArgSet) -> ArgSet:
        if mask < 0 or mask >> len(self.names):
            raise AFInputError("argument set outside the framework", mask)
        return mask

    def check_id(self, arg: int) -> int:
        if not 0 <= arg < len(self.names):
            raise AFInputError("argument id outside the framework", arg)
        return arg


@dataclass(frozen=True, slots=True, eq=False)
class ArgumentationFramework:
    """A finite AF. ``out_masks[i]`` holds the targets attacked by argument ``i``."""

    args: ArgumentTable
    out_masks: tuple[int, ...]
    in_masks: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = len(self.args)
        if len(self.out_masks) != n:
            raise AFInputError("attack rows do not match the argument table", len(self.out_masks))
        incoming = [0] * n
        for i, row in enumerate(self.out_masks):
            self.args.check(row)
            for j in bits(row):
                incoming[j] |= 1 << i
        object.__setattr__(self, "in_masks", tuple(incoming))

    @classmethod
    def from_pairs(
        cls, args: ArgumentTable, pairs: Iterable[tuple[int, int]]
    ) -> ArgumentationFramework:
        rows = [0] * len(args)
        for i, j in pairs:
            args.check_id(i)
            rows[i] |= 1 << args.check_id(j)
        return cls(args, tuple(rows))

    @classmethod
    def from_bitmask(cls, args: ArgumentTable, mask: int) -> ArgumentationFramework:
        """Decode the enumeration layout: bit ``i * n + j`` encodes the attack (i, j)."""
        n = len(args)
        full = args.full
        return cls(args, tuple((mask >> (i * n)) & full for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.args)

    @property
    def names(self) -> tuple[str, ...]:
        return self.args.names

    @property
    def bitmask(self) -> int:
        n = self.n
        return sum(row << (i * n) for i, row in enumerate(self.out_masks))

    def has_attack(self, source: int, target: int) -> bool:
        return bool(self.out_masks[source] >> target & 1)

    def attacks(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.out_masks):
            for j in bits(row):
                yield i, j

    def attack_pairs(self) -> frozenset[tuple[str, str]]:
        names = self.args.names
        return frozenset((names[i], names[j]) for i, j in self.attacks())

    def signature(self) -> tuple[frozenset[str], frozenset[tuple[str, str]]]:
        return frozenset(self.args.names), self.attack_pairs()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArgumentationFramework):
            return NotImplemented
        if self.args == other.args:
            return self.out_masks == other.out_masks
        return self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def __repr__(self) -> str:
        pairs = ", ".join(f"{a}->{b}" for a, b in sorted(self.attack_pairs()))
        return f"ArgumentationFramework(args={list(self.args.names)}, attacks=[{pairs}])"


def build_af(
    arg_names: Iterable[str],
    attack_pairs: Iterable[tuple[str, str]],
    *,
    strict: bool = False,
) -> ArgumentationFramework:
    names = list(dict.fromkeys(arg_names))
    declared = set(names)
    pairs = list(dict.fromkeys(attack_pairs))
    for source, target in pairs:
        for name in (source, target):
            if name not in declared:
                if strict:
                    raise AFInputError("attack references an undeclared argument", name)
                declared.add(name)
                names.append(name)
    table = ArgumentTable(tuple(names))
    return ArgumentationFramework.from_pairs(
        table, ((table.index[s], table.index[t]) for s, t in pairs)
    )


def attacked_by(af: ArgumentationFramework, s: ArgSet) -> ArgSet:
    """Arguments attacked by some member of ``s``."""
    result = 0
    for i in bits(af.args.check(s)):
        result |= af.out_masks[i]
    return result


def attackers_of(af: ArgumentationFramework, s: ArgSet) -> ArgSet:
    result = 0
    for i in bits(af.args.check(s)):
        result |= af.in_masks[i]
    return result


def is_conflict_free(af: ArgumentationFramework, s: ArgSet) -> bool:
    return attacked_by(af, s) & s == 0


def conflict_free_masks(af: ArgumentationFramework) -> list[ArgSet]:
    """All conflict-free sets, grown one argument id at a time."""
    found = [0]
    for i in range(af.n):
        bit = 1 << i
        row = af.out_masks[i]
        if row & bit:
            continue
        blocked = row | af.in_masks[i]
        found.extend([m | bit for m in found if not m & blocked])
    return found


def conflict_free_sets(af: ArgumentationFramework) -> ExtensionSet:
    return ExtensionSet.of(af.args, conflict_free_masks(af))


def range_of(af: ArgumentationFramework, s: ArgSet) -> ArgSet:
    return s | attacked_by(af, s)


def anti_range_of(af: ArgumentationFramework, s: ArgSet) -> ArgSet:
    return s | attackers_of(af, s)


def defends(af: ArgumentationFramework, s: ArgSet, arg: int) -> bool:
    af.args.check_id(arg)
    return af.in_masks[arg] & ~attacked_by(af, s) == 0


def characteristic(af: ArgumentationFramework, s: ArgSet) -> ArgSet:
    hit = attacked_by(af, s)
    result = 0
    for i, incoming in enumerate(af.in_masks):
        if incoming & ~hit == 0:
            result |= 1 << i
    return result


def self_loops(af: ArgumentationFramework) -> ArgSet:
    result = 0
    for i, row in enumerate(af.out_masks):
        result |= row & (1 << i)
    return result


def union_af(
    first: ArgumentationFramework, second: ArgumentationFramework
) -> ArgumentationFramework:
    if first.args == second.args:
        return ArgumentationFramework(
            first.args, tuple(a | b for a, b in zip(first.out_masks, second.out_masks))
        )
    names = list(first.names)
    names.extend(name for name in second.names if name not in first.args.index)
    table = ArgumentTable(tuple(names))
    remap = [table.index[name] for name in second.names]
    pairs = list(first.attacks())
    pairs.extend((remap[i], remap[j]) for i, j in second.attacks())
    return ArgumentationFramework.from_pairs(table, pairs)


def loop_reduct(af: ArgumentationFramework) -> ArgumentationFramework:
    loops = self_loops(af)
    rows = []
    for i, row in enumerate(af.out_masks):
        bit = 1 << i
        rows.append(row & ~(loops & ~bit) if loops & bit else row)
    return ArgumentationFramework(af.args, tuple(rows))


def restrict_args(af: ArgumentationFramework, names: Sequence[str]) -> ArgumentationFramework:
    """Re-index ``af`` over ``names``, a superset of its arguments, keeping its attacks."""
    table = ArgumentTable(tuple(names))
    remap = [table.id_of(name) for name in af.names]
    pairs = ((remap[i], remap[j]) for i, j in af.attacks())
    return ArgumentationFramework.from_pairs(table, pairs)


@dataclass(frozen=True, slots=True, eq=False)
class ExtensionSet:
    """A deduplicated family of argument sets in canonical order."""

    args: ArgumentTable
    masks: tuple[ArgSet, ...]

    @classmethod
    def of(cls, args: ArgumentTable, masks: Iterable[ArgSet]) -> ExtensionSet:
        return cls(args, tuple(sorted(set(masks), key=canonical_key)))

    def __iter__(self) -> Iterator[ArgSet]:
        return iter(self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, mask: object) -> bool:
        return mask in self.masks

    def as_names(self) -> frozenset[frozenset[str]]:
        names = self.args.names
        return frozenset(frozenset(names[i] for i in bits(m)) for m in self.masks)

    def sorted_names(self) -> list[list[str]]:
        """Extensions as sorted name lists, ordered by size then names."""
        rows = [sorted(self.args.names_of(m)) for m in self.masks]
        return sorted(rows, key=lambda row: (len(row), row))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtensionSet):
            return NotImplemented
        if self.args == other.args:
            return self.masks == other.masks
        return self.as_names() == other.as_names()

    def __hash__(self) -> int:
        return hash(self.as_names())

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(row) + "}" for row in self.sorted_names())
        return f"ExtensionSet([{body}])"
