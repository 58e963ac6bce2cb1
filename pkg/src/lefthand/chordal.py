"""Chordal graphs as lefthanded graphs.

A chordal graph is recognised with maximum cardinality search, turned into a
clique tree (a tree of maximal cliques in which every vertex occupies a
connected subtree), and the clique tree is rooted to produce a tree order
under which the graph is lefthanded.

Tree orders are stored as successor forests: each vertex points at the unique
element covering it, or at None when it is maximal.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Optional

from .graph import GraphError, LabeledGraph

EliminationOrdering = tuple[int, ...]


class Violation(NamedTuple):
    """A failed structural check and the vertices that witness it."""

    kind: str
    vertices: tuple[str, ...]


class NotChordalError(GraphError):
    def __init__(self, witness: Violation):
        self.witness = witness
        v, u, w = witness.vertices
        super().__init__(
            f"graph is not chordal: {u} and {w} are later neighbours of {v} but not adjacent"
        )


class TreeOrderError(GraphError):
    pass


def mcs_order(g: LabeledGraph) -> EliminationOrdering:
    """Maximum cardinality search visiting order (ties: smallest index).

    For a chordal graph the reverse of this order is a perfect elimination
    ordering.
    """
    n = g.n
    weight = [0] * n
    done = [False] * n
    # buckets[w] holds unvisited vertices of weight w
    buckets: list[set[int]] = [set(range(n))] + [set() for _ in range(n)]
    top = 0
    order = []
    for _ in range(n):
        while top > 0 and not buckets[top]:
            top -= 1
        v = min(buckets[top])
        buckets[top].discard(v)
        done[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not done[u]:
                buckets[weight[u]].discard(u)
                weight[u] += 1
                buckets[weight[u]].add(u)
                top = max(top, weight[u])
    return tuple(order)


def check_chordal(g: LabeledGraph, ord: EliminationOrdering) -> Optional[Violation]:
    """Check that ``reversed(ord)`` is a perfect elimination ordering.

    Returns None when it is, else ``Violation("chordless", (v, u, w))`` with
    ``u`` and ``w`` later-eliminated neighbours of ``v`` that are not adjacent.
    """
    if sorted(ord) != list(range(g.n)):
        raise GraphError("ordering is not a permutation of the vertices")
    peo = ord[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        for w in later:
            if w != parent and w not in g.adj[parent]:
                return Violation("chordless", (g.names[v], g.names[parent], g.names[w]))
    return None


@dataclass(frozen=True)
class CliqueTree:
    """Tree of maximal cliques.

    ``subtrees[v]`` is the set of clique nodes containing vertex ``v``.  The
    tree is rooted at ``root``; a virtual leaf x0 hangs off ``root`` and holds
    no vertex, so paths toward x0 are paths toward ``root``.
    """

    cliques: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]
    subtrees: tuple[frozenset[int], ...]
    root: int
    parent: tuple[Optional[int], ...] = field(default=(), compare=False)
    depth: tuple[int, ...] = field(default=(), compare=False)


def build_clique_tree(
    g: LabeledGraph, peo: EliminationOrdering, root_vertex: Optional[int] = None
) -> CliqueTree:
    """Clique tree of a chordal graph from a perfect elimination ordering.

    Maximal cliques are the sets ``{v} + later neighbours of v`` not contained
    in another such set; the tree is a maximum-weight spanning tree of the
    clique intersection graph, weights being intersection sizes.  The root
    is the first clique containing ``root_vertex`` (default: the last vertex
    of ``peo``).
    """
    witness = check_chordal(g, tuple(reversed(peo)))
    if witness is not None:
        raise NotChordalError(witness)
    if g.n == 0:
        return CliqueTree((), (), (), -1, (), ())
    pos = {v: i for i, v in enumerate(peo)}
    candidates = [
        frozenset([v, *(u for u in g.adj[v] if pos[u] > pos[v])]) for v in peo
    ]
    cliques = []
    for i, c in enumerate(candidates):
        # a candidate can only be contained in one generated earlier in the peo
        if not any(c < candidates[j] for j in range(i)):
            cliques.append(c)
    k = len(cliques)

    # Kruskal on all pairs, heaviest first; weight-0 edges join components
    pairs = sorted(
        ((-len(cliques[a] & cliques[b]), a, b) for a in range(k) for b in range(a + 1, k))
    )
    uf = list(range(k))

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    edges = []
    for _, a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            uf[ra] = rb
            edges.append((a, b))
            if len(edges) == k - 1:
                break

    subtrees = [set() for _ in range(g.n)]
    for ci, c in enumerate(cliques):
        for v in c:
            subtrees[v].add(ci)

    if root_vertex is None:
        root_vertex = peo[-1]
    root = min(subtrees[root_vertex])

    nbrs: list[list[int]] = [[] for _ in range(k)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    parent: list[Optional[int]] = [None] * k
    depth = [0] * k
    stack, seen = [root], {root}
    while stack:
        c = stack.pop()
        for d in nbrs[c]:
            if d not in seen:
                seen.add(d)
                parent[d] = c
                depth[d] = depth[c] + 1
                stack.append(d)
    return CliqueTree(
        tuple(cliques),
        tuple(edges),
        tuple(frozenset(s) for s in subtrees),
        root,
        tuple(parent),
        tuple(depth),
    )


class TreeOrder:
    """Tree partial order on named vertices, given by a successor forest.

    ``u <= v`` iff ``v`` is reached from ``u`` by following successor links.
    ``vertices`` fixes the input order used for deterministic tie-breaks.
    """

    def __init__(self, vertices: Iterable[str], successor: Mapping[str, Optional[str]]):
        self.vertices = tuple(vertices)
        names = set(self.vertices)
        succ = {v: None for v in self.vertices}
        for v, s in successor.items():
            if v not in names or (s is not None and s not in names):
                raise TreeOrderError(f"successor map mentions unknown vertex {v if v not in names else s}")
            succ[v] = s
        self.successor: dict[str, Optional[str]] = succ
        self._above: Optional[dict[str, tuple[str, ...]]] = None

    def __eq__(self, other):
        if not isinstance(other, TreeOrder):
            return NotImplemented
        return self.vertices == other.vertices and self.successor == other.successor

    def __repr__(self):
        return f"TreeOrder({self.successor!r})"

    def find_cycle(self) -> Optional[tuple[str, ...]]:
        state: dict[str, int] = {}
        for start in self.vertices:
            path = []
            v = start
            while v is not None and v not in state:
                state[v] = 1
                path.append(v)
                v = self.successor[v]
            if v is not None and state[v] == 1:
                return tuple(path[path.index(v):])
            for u in path:
                state[u] = 2
        return None

    def above(self, v: str) -> tuple[str, ...]:
        """Strict up-set of ``v``, nearest first (a chain by construction)."""
        if self._above is None:
            cyc = self.find_cycle()
            if cyc is not None:
                raise TreeOrderError(f"cycle in successor map: {' -> '.join(cyc)}")
            memo: dict[str, tuple[str, ...]] = {}
            for start in self.vertices:
                path = []
                u = start
                while u is not None and u not in memo:
                    path.append(u)
                    u = self.successor[u]
                for w in reversed(path):
                    s = self.successor[w]
                    memo[w] = ((s,) + memo[s]) if s is not None else ()
            self._above = memo
        return self._above[v]

    def lt(self, u: str, v: str) -> bool:
        return v in self.above(u)

    def le(self, u: str, v: str) -> bool:
        return u == v or self.lt(u, v)

    def comparable(self, u: str, v: str) -> bool:
        return self.le(u, v) or self.le(v, u)

    def down_set(self, v: str) -> frozenset[str]:
        """D_v: every vertex strictly below ``v``."""
        return frozenset(u for u in self.vertices if self.lt(u, v))

    def to_json(self) -> dict[str, Optional[str]]:
        return dict(self.successor)


def _tie_key(tiebreak: str, n: int):
    if tiebreak == "index":
        return lambda i: i
    if tiebreak == "reverse":
        return lambda i: n - 1 - i
    raise ValueError(f"unknown tiebreak {tiebreak!r}")


def build_tree_order(
    g: LabeledGraph, root: Optional[str] = None, tiebreak: str = "index"
) -> TreeOrder:
    """Lefthanded tree order of a chordal graph, read off a rooted clique tree.

    With every subtree's path P_v running from its top node to the root,
    ``u < v`` exactly when P_u meets the subtree of ``v`` but P_v misses the
    subtree of ``u``, i.e. the top node of ``v`` is a proper ancestor of the
    top node of ``u``.  Vertices sharing a top node meet each other's paths
    and are chained by input index (``tiebreak="reverse"`` flips that).

    ``root`` names a vertex whose clique becomes the root; by default the
    last vertex of the perfect elimination ordering.
    """
    ord = mcs_order(g)
    witness = check_chordal(g, ord)
    if witness is not None:
        raise NotChordalError(witness)
    if g.n == 0:
        return TreeOrder((), {})
    peo = ord[::-1]
    tree = build_clique_tree(g, peo, None if root is None else g.index(root))
    rank = _tie_key(tiebreak, g.n)

    top = [min(tree.subtrees[v], key=tree.depth.__getitem__) for v in range(g.n)]
    at: dict[int, list[int]] = {}
    for v in range(g.n):
        at.setdefault(top[v], []).append(v)
    for members in at.values():
        members.sort(key=rank)

    successor: dict[str, Optional[str]] = {}
    for c, members in at.items():
        for a, b in zip(members, members[1:]):
            successor[g.names[a]] = g.names[b]
        last = members[-1]
        up = tree.parent[c]
        while up is not None and up not in at:
            up = tree.parent[up]
        successor[g.names[last]] = None if up is None else g.names[at[up][0]]
    order = TreeOrder(g.names, successor)
    bad = verify_lefthanded(g, order)
    if bad is not None:
        raise AssertionError(f"constructed tree order is not lefthanded: {bad}")
    return order


def verify_lefthanded(g: LabeledGraph, t: TreeOrder) -> Optional[Violation]:
    """First violation of the tree-order law or of the lefthanded conditions.

    Kinds: ``"cycle"``, ``"comparability"`` (edge with incomparable ends) and
    ``"closure"`` (``w < u < v`` with ``v ~ w`` but not ``v ~ u``; witness
    ``(w, u, v)``).  None means ``(g, t)`` is a lefthanded graph.
    """
    if set(t.vertices) != set(g.names):
        extra = set(t.successor) - set(g.names)
        if extra:
            raise TreeOrderError(f"successor map mentions unknown vertex {sorted(extra)[0]}")
        raise TreeOrderError("tree order does not cover the graph's vertices")
    cyc = t.find_cycle()
    if cyc is not None:
        return Violation("cycle", cyc)
    # with a successor forest each up-set is the successor chain, hence a chain
    for u, v in g.edges():
        if not t.comparable(u, v):
            return Violation("comparability", (u, v))
    for w in g.names:
        ups = t.above(w)
        nbrs = g.neighbors(w)
        # ups is nearest-first; every vertex between w and a neighbour above must be adjacent to it
        for j, v in enumerate(ups):
            if v in nbrs:
                for u in ups[:j]:
                    if not g.adjacent(u, v):
                        return Violation("closure", (w, u, v))
    return None


def down_set(t: TreeOrder, v: str) -> frozenset[str]:
    return t.down_set(v)


def down_neighbors(g: LabeledGraph, t: TreeOrder, v: str) -> frozenset[str]:
    """N_v: neighbours of ``v`` strictly below it."""
    nbrs = g.neighbors(v)
    return frozenset(u for u in t.down_set(v) if u in nbrs)


def far_set(g: LabeledGraph, t: TreeOrder, v: str) -> frozenset[str]:
    """F_v = D_v minus N_v."""
    return t.down_set(v) - down_neighbors(g, t, v)


def maximal_elements(t: TreeOrder, u: Iterable[str]) -> frozenset[str]:
    """mu(U): members of ``u`` with nothing of ``u`` strictly above them."""
    u = set(u)
    return frozenset(x for x in u if not any(w in u for w in t.above(x)))


def linear_extension(t: TreeOrder) -> tuple[str, ...]:
    """Topological order of ``t``; among available vertices the smallest input index first."""
    cyc = t.find_cycle()
    if cyc is not None:
        raise TreeOrderError(f"cycle in successor map: {' -> '.join(cyc)}")
    index = {v: i for i, v in enumerate(t.vertices)}
    pending = {v: 0 for v in t.vertices}
    for v, s in t.successor.items():
        if s is not None:
            pending[s] += 1
    heap = [index[v] for v in t.vertices if pending[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        v = t.vertices[heapq.heappop(heap)]
        out.append(v)
        s = t.successor[v]
        if s is not None:
            pending[s] -= 1
            if pending[s] == 0:
                heapq.heappush(heap, index[s])
    return tuple(out)
