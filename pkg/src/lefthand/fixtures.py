"""Small named graphs used in examples and tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .chordal import TreeOrder
from .graph import LabeledGraph

GOLDNER_HARARY_EDGES = (
    ("a", "b"), ("a", "e"), ("a", "g"),
    ("b", "c"), ("b", "d"), ("b", "e"), ("b", "f"), ("b", "g"),
    ("d", "g"), ("d", "f"),
    ("c", "e"), ("c", "f"),
    ("e", "f"), ("f", "g"),
    ("k", "j"), ("k", "e"), ("k", "g"),
    ("j", "h"), ("j", "i"), ("j", "e"), ("j", "f"), ("j", "g"),
    ("i", "g"), ("i", "f"),
    ("h", "e"), ("h", "f"),
    ("e", "g"),
)  # fmt: skip

# hand-drawn realisation: leaves a, c, d under b; h, i, k under j; b, j under e; e < f < g
GOLDNER_HARARY_SUCCESSORS = {
    "a": "b", "c": "b", "d": "b",
    "h": "j", "i": "j", "k": "j",
    "b": "e", "j": "e",
    "e": "f", "f": "g", "g": None,
}  # fmt: skip


def goldner_harary(p=Fraction(1, 8)) -> LabeledGraph:
    """The 11-vertex maximal planar chordal graph, every label ``p``."""
    p = Fraction(p)
    return LabeledGraph.from_edges([(v, p) for v in "abcdefghijk"], GOLDNER_HARARY_EDGES)


def goldner_harary_order() -> TreeOrder:
    return TreeOrder("abcdefghijk", GOLDNER_HARARY_SUCCESSORS)


def complete_graph(n: int, p=Fraction(0)) -> LabeledGraph:
    names = [f"v{i}" for i in range(1, n + 1)]
    return LabeledGraph.from_edges([(v, Fraction(p)) for v in names], combinations(names, 2))


def cycle_graph(n: int, p=Fraction(0)) -> LabeledGraph:
    names = [f"c{i}" for i in range(n)]
    return LabeledGraph.from_edges(
        [(v, Fraction(p)) for v in names],
        [(names[i], names[(i + 1) % n]) for i in range(n)],
    )


def path_graph(names="abc", p=Fraction(0)) -> LabeledGraph:
    names = list(names)
    return LabeledGraph.from_edges(
        [(v, Fraction(p)) for v in names], list(zip(names, names[1:]))
    )


def chain_order(names) -> TreeOrder:
    """Linear order, first name lowest."""
    names = list(names)
    return TreeOrder(names, {u: v for u, v in zip(names, names[1:])})
