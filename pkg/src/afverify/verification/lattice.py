from __future__ import annotations

from collections.abc import Iterable

import networkx as nx

from afverify.verification.neighborhood import (
    BOTTOM,
    LEVEL_ONE,
    REPRESENTATIVES,
    TOP,
    BasicFn,
    NeighborhoodFn,
    eval_basic,
    representative,
)

# Edges point from the less informative node to the more informative one.
_PAIR_PARENTS: dict[str, tuple[str, ...]] = {
    "+": ("+±", "+∓"),
    "±": ("+±", "±∓", "-±"),
    "∩": ("+±", "∩∪", "-∓"),
    "Δ": ("±∓", "∩∪"),
    "∪": ("+∓", "∩∪", "-±"),
    "∓": ("+∓", "±∓", "-∓"),
    "-": ("-±", "-∓"),
}


def _build_lattice() -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(REPRESENTATIVES)
    for node in LEVEL_ONE:
        graph.add_edge(BOTTOM, node)
        graph.add_edges_from((node, parent) for parent in _PAIR_PARENTS[node])
    for node, basics in REPRESENTATIVES.items():
        if len(basics) == 2 and node != TOP:
            graph.add_edge(node, TOP)
    return graph


LATTICE = _build_lattice()


def more_informative(x: NeighborhoodFn, y: NeighborhoodFn) -> bool:
    """``x`` ⪰ ``y``: the image under ``y`` can be computed from the image under ``x``."""
    return nx.has_path(LATTICE, y.representative, x.representative)


def strictly_more_informative(x: NeighborhoodFn, y: NeighborhoodFn) -> bool:
    return x != y and more_informative(x, y)


def hierarchy_edges() -> list[tuple[str, str]]:
    """Covering edges (lower, upper), in node declaration order."""
    order = {label: index for index, label in enumerate(REPRESENTATIVES)}
    return sorted(LATTICE.edges, key=lambda edge: (order[edge[0]], order[edge[1]]))


def all_representatives() -> list[NeighborhoodFn]:
    return [representative(label) for label in REPRESENTATIVES]


def minimal_elements(fns: Iterable[NeighborhoodFn]) -> list[NeighborhoodFn]:
    """The ⪯-minimal members of ``fns``, in node declaration order."""
    pool = set(fns)
    order = list(REPRESENTATIVES)
    kept = [
        fn for fn in pool if not any(strictly_more_informative(fn, other) for other in pool)
    ]
    return sorted(kept, key=lambda fn: order.index(fn.representative))


def _basics_of(fn: NeighborhoodFn | Iterable[BasicFn]) -> tuple[BasicFn, ...]:
    if isinstance(fn, NeighborhoodFn):
        return tuple(sorted(fn.basics, key=list(BasicFn).index))
    return tuple(BasicFn(b) for b in fn)


def informativeness_oracle(
    x: NeighborhoodFn | Iterable[BasicFn], y: NeighborhoodFn | Iterable[BasicFn]
) -> bool:
    """Brute-force ``x`` ⪰ ``y`` over a 4-element universe.

    Each basic acts elementwise on membership in (S, S'), so a universe holding
    all four membership patterns exposes every collision.
    """
    xs, ys = _basics_of(x), _basics_of(y)
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for plus in range(16):
        for minus in range(16):
            image_x = tuple(eval_basic(b, plus, minus) for b in xs)
            image_y = tuple(eval_basic(b, plus, minus) for b in ys)
            if seen.setdefault(image_x, image_y) != image_y:
                return False
    return True
