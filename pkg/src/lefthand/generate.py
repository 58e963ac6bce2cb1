"""Random labeled chordal graphs for property suites and the ``gen`` command."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .graph import LabeledGraph


def random_chordal(
    n: int,
    seed: int,
    p: Optional[Fraction] = None,
    max_denominator: int = 64,
    max_label: Fraction = Fraction(1),
    edge_bias: float = 0.5,
) -> LabeledGraph:
    """Chordal graph on ``v0 .. v{n-1}``, deterministic in ``seed``.

    Vertices are added one at a time and joined to a random subset of one
    existing clique, so the reverse insertion order is a perfect elimination
    ordering.  Labels are ``p`` for every vertex, or else random fractions
    ``k/d`` with ``d <= max_denominator`` and value at most ``max_label``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    cliques: list[list[int]] = []
    edges = []
    for i in range(n):
        nbrs: list[int] = []
        if cliques:
            base = rng.choice(cliques)
            nbrs = [u for u in base if rng.random() < edge_bias]
            if len(nbrs) == len(base):
                cliques.remove(base)
        edges.extend((names[u], names[i]) for u in nbrs)
        cliques.append(nbrs + [i])
    labels = []
    for _ in range(n):
        if p is not None:
            labels.append(Fraction(p))
        else:
            d = rng.randint(1, max_denominator)
            labels.append(Fraction(rng.randint(0, int(max_label * d)), d))
    return LabeledGraph.from_edges(zip(names, labels), edges)
