"""Probability-labeled undirected graphs and their two text formats."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .numerics import format_rational, parse_rational


class GraphError(ValueError):
    """Invalid graph content (bad label, duplicate vertex, unknown endpoint, ...)."""


class GraphParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class LabeledGraph:
    """Undirected simple graph with an exact label in [0, 1] on every vertex.

    Vertices keep their input order; ``index(name)`` gives the dense index.
    ``adj[i]`` is the frozenset of indices adjacent to vertex ``i``.
    """

    names: tuple[str, ...]
    labels: tuple[Fraction, ...]
    adj: tuple[frozenset[int], ...]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not (len(self.names) == len(self.labels) == len(self.adj)):
            raise GraphError("names, labels and adjacency differ in length")
        index: dict[str, int] = {}
        for i, name in enumerate(self.names):
            if name in index:
                raise GraphError(f"duplicate vertex {name}")
            index[name] = i
        for i, p in enumerate(self.labels):
            if not 0 <= p <= 1:
                raise GraphError(f"label out of range {self.names[i]}")
        n = len(self.names)
        for i, nbrs in enumerate(self.adj):
            if i in nbrs:
                raise GraphError(f"self-loop rejected {self.names[i]}")
            for j in nbrs:
                if not 0 <= j < n or i not in self.adj[j]:
                    raise GraphError("adjacency is not symmetric")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[tuple[str, Fraction]],
        edges: Iterable[tuple[str, str]],
    ) -> "LabeledGraph":
        names, labels = [], []
        seen = set()
        for name, p in vertices:
            if name in seen:
                raise GraphError(f"duplicate vertex {name}")
            seen.add(name)
            p = Fraction(p)
            if not 0 <= p <= 1:
                raise GraphError(f"label out of range {name}")
            names.append(name)
            labels.append(p)
        index = {v: i for i, v in enumerate(names)}
        adj: list[set[int]] = [set() for _ in names]
        for u, v in edges:
            if u not in index or v not in index:
                raise GraphError(f"unknown endpoint {u if u not in index else v}")
            if u == v:
                raise GraphError(f"self-loop rejected {u}")
            i, j = index[u], index[v]
            adj[i].add(j)
            adj[j].add(i)
        return cls(tuple(names), tuple(labels), tuple(frozenset(a) for a in adj))

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise GraphError(f"unknown vertex {name}") from None

    def label(self, name: str) -> Fraction:
        return self.labels[self.index(name)]

    def neighbors(self, name: str) -> frozenset[str]:
        return frozenset(self.names[j] for j in self.adj[self.index(name)])

    def adjacent(self, u: str, v: str) -> bool:
        return self.index(v) in self.adj[self.index(u)]

    def edges(self) -> list[tuple[str, str]]:
        """Edges as name pairs, sorted by endpoint indices."""
        return [
            (self.names[i], self.names[j])
            for i in range(self.n)
            for j in sorted(self.adj[i])
            if i < j
        ]

    def with_labels(self, labels: Mapping[str, Fraction] | Fraction) -> "LabeledGraph":
        """Same graph, new labels: a mapping by name or one uniform value."""
        if isinstance(labels, Mapping):
            new = tuple(Fraction(labels[v]) for v in self.names)
        else:
            new = (Fraction(labels),) * self.n
        return LabeledGraph(self.names, new, self.adj)

    def induced(self, keep: Iterable[str]) -> "LabeledGraph":
        keep = set(keep)
        verts = [(v, p) for v, p in zip(self.names, self.labels) if v in keep]
        return LabeledGraph.from_edges(
            verts, [(u, v) for u, v in self.edges() if u in keep and v in keep]
        )


def is_independent(g: LabeledGraph, s: Iterable[str]) -> bool:
    idx = [g.index(v) for v in s]
    members = set(idx)
    return all(not (g.adj[i] & members) for i in idx)


def parse_graph(text: str, format: str = "json") -> LabeledGraph:
    if format == "json":
        return _parse_json(text)
    if format == "edgelist":
        return _parse_edgelist(text)
    raise ValueError(f"unknown graph format {format!r}")


def _label(text, name: str, line: Optional[int] = None) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise GraphParseError(f"bad label for {name}: {exc}", line) from None


def _parse_json(text: str) -> LabeledGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict):
        raise GraphParseError("top-level JSON value must be an object")
    verts = doc.get("vertices", [])
    edges = doc.get("edges", [])
    if not isinstance(verts, list) or not isinstance(edges, list):
        raise GraphParseError('"vertices" and "edges" must be arrays')
    vertices = []
    for item in verts:
        if not isinstance(item, dict) or not isinstance(item.get("name"), str):
            raise GraphParseError(f"malformed vertex entry {item!r}")
        p = item.get("p")
        if not isinstance(p, str):
            raise GraphParseError(f"label of {item['name']} must be a string")
        vertices.append((item["name"], _label(p, item["name"])))
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise GraphParseError(f"malformed edge {e!r}")
        pairs.append((e[0], e[1]))
    return LabeledGraph.from_edges(vertices, pairs)


def _parse_edgelist(text: str) -> LabeledGraph:
    vertices, edges = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 3:
                raise GraphParseError("expected 'vertex <name> <p>'", lineno)
            if edges:
                raise GraphParseError("vertex lines must precede edge lines", lineno)
            vertices.append((parts[1], _label(parts[2], parts[1], lineno)))
        elif len(parts) == 2:
            edges.append((parts[0], parts[1]))
        else:
            raise GraphParseError(f"cannot parse {raw.strip()!r}", lineno)
    return LabeledGraph.from_edges(vertices, edges)


def serialize_graph(g: LabeledGraph, format: str = "json") -> str:
    if format == "json":
        doc = {
            "vertices": [
                {"name": v, "p": format_rational(p)} for v, p in zip(g.names, g.labels)
            ],
            "edges": [[u, v] for u, v in g.edges()],
        }
        return json.dumps(doc, indent=2) + "\n"
    if format == "edgelist":
        lines = [f"vertex {v} {format_rational(p)}" for v, p in zip(g.names, g.labels)]
        lines += [f"{u} {v}" for u, v in g.edges()]
        return "".join(line + "\n" for line in lines)
    raise ValueError(f"unknown graph format {format!r}")
