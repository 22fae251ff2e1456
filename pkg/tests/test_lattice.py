from __future__ import annotations

from itertools import combinations

from afverify.errors import AFInputError
from afverify.verification import (
    REPRESENTATIVES,
    BasicFn,
    all_representatives,
    canonicalize,
    eval_basic,
    hierarchy_edges,
    informativeness_oracle,
    more_informative,
    parse_neighborhood,
    representative,
)
from afverify.verification.lattice import minimal_elements, strictly_more_informative

A, B, C = 0b001, 0b010, 0b100
_NON_EMPTY = [b for b in BasicFn if b is not BasicFn.EPS]


def _label(*basics: BasicFn) -> str:
    return canonicalize(basics).label


def test_eval_basic_examples() -> None:
    assert eval_basic(BasicFn.MINUS_PLUS, A | B, A | B) == 0
    assert eval_basic(BasicFn.DELTA, A, B) == A | B
    assert eval_basic(BasicFn.PLUS_MINUS, B | C, C) == B
    assert eval_basic(BasicFn.CAP, A | B, B | C) == B
    assert eval_basic(BasicFn.CUP, A, C) == A | C
    assert eval_basic(BasicFn.EPS, A | B | C, A) == 0


def test_canonicalize_merges_to_the_join() -> None:
    assert _label(BasicFn.PLUS, BasicFn.CAP) == "+±"
    assert _label(BasicFn.PLUS, BasicFn.MINUS, BasicFn.DELTA) == "+-"
    assert _label(BasicFn.PLUS_MINUS, BasicFn.MINUS_PLUS, BasicFn.DELTA) == "±∓"
    assert _label(BasicFn.CAP, BasicFn.CUP) == "∩∪"
    assert _label(BasicFn.PLUS, BasicFn.MINUS_PLUS, BasicFn.PLUS_MINUS) == "+-"
    assert _label(BasicFn.DELTA) == "Δ"


def test_canonicalize_empty_is_bottom() -> None:
    assert _label() == "ε"
    assert _label(BasicFn.EPS) == "ε"
    assert canonicalize([]) == representative("ε")


def test_every_subset_lands_on_an_equivalent_node() -> None:
    seen = set()
    for size in range(len(_NON_EMPTY) + 1):
        for subset in combinations(_NON_EMPTY, size):
            fn = canonicalize(subset)
            seen.add(fn.label)
            rep = REPRESENTATIVES[fn.label]
            assert informativeness_oracle(subset or (BasicFn.EPS,), rep), subset
            assert informativeness_oracle(rep, subset or (BasicFn.EPS,)), subset
    assert seen == set(REPRESENTATIVES)
    assert len(seen) == 15


def test_equality_follows_the_node() -> None:
    assert canonicalize([BasicFn.PLUS, BasicFn.CAP]) == canonicalize(
        [BasicFn.PLUS_MINUS, BasicFn.CAP]
    )
    assert canonicalize([BasicFn.PLUS]) != canonicalize([BasicFn.MINUS])


def test_more_informative_examples() -> None:
    top = representative("+-")
    bottom = representative("ε")
    for fn in all_representatives():
        assert more_informative(top, fn)
        assert more_informative(fn, bottom)
        assert more_informative(fn, fn)
    assert more_informative(representative("+∓"), representative("∪"))
    assert not more_informative(representative("+∓"), representative("-"))
    assert not more_informative(representative("+"), representative("-"))
    assert strictly_more_informative(representative("-±"), representative("±"))
    assert not strictly_more_informative(representative("±"), representative("±"))


def test_lattice_agrees_with_oracle() -> None:
    reps = all_representatives()
    assert len(reps) == 15
    checked = 0
    for x in reps:
        for y in reps:
            assert more_informative(x, y) == informativeness_oracle(x, y), (x.label, y.label)
            checked += 1
    assert checked == 225


def test_hierarchy_edges() -> None:
    edges = hierarchy_edges()
    assert len(edges) == 31
    assert ("ε", "+") in edges
    assert ("Δ", "±∓") in edges
    assert ("∩∪", "+-") in edges
    assert ("+", "-±") not in edges
    assert edges[0][0] == "ε"


def test_minimal_elements() -> None:
    pool = [representative(label) for label in ("+-", "+∓", "∓", "-∓")]
    assert [fn.label for fn in minimal_elements(pool)] == ["∓"]
    pool = [representative(label) for label in ("+", "-", "+-")]
    assert [fn.label for fn in minimal_elements(pool)] == ["+", "-"]


def test_parse_neighborhood() -> None:
    assert parse_neighborhood("p,mp").label == "+∓"
    assert parse_neighborhood("P, MP").label == "+∓"
    assert parse_neighborhood("cap,cup,delta").label == "∩∪"
    assert parse_neighborhood("-±").label == "-±"
    assert parse_neighborhood("eps").label == "ε"
    assert representative("±∓").cli_name == "pm,mp"
    assert representative("+-").arity == 2


def test_parse_neighborhood_rejects_unknown_names() -> None:
    for text in ("p,foo", "", " , "):
        try:
            parse_neighborhood(text)
        except AFInputError:
            continue
        raise AssertionError(f"Expected AFInputError for {text!r}")


def test_representative_rejects_unknown_label() -> None:
    try:
        representative("++")
    except AFInputError:
        return
    raise AssertionError("Expected AFInputError")
