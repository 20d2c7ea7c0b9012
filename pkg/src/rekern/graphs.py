"""Undirected and directed graph value types plus local modifications.

Vertices are dense 0-based integers.  Graphs are immutable: every
operation returns a fresh graph, so an original and a locally modified
instance can be held side by side.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ModificationInvalid, VertexOutOfRange

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Order an undirected edge as (min, max)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    ``labels``, when present, assigns one string per vertex (gadget roles
    such as ``u_{1,0}``) and survives vertex deletion re-indexing.
    """

    n: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (u < v):
                raise ValueError(f"edge {(u, v)} is not normalized")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {(u, v)} out of range for n={self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must cover every vertex exactly once")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        normalized = frozenset(normalize_edge(u, v) for u, v in edges)
        return cls(n, normalized, tuple(labels) if labels is not None else None)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adjacency[v]]

    def label_of(self, v: int) -> str | None:
        self._check_vertex(v)
        return self.labels[v] if self.labels is not None else None

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise VertexOutOfRange(f"vertex {v} not in range(0, {self.n})")

    def __repr__(self) -> str:  # keeps pytest failure output readable
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class Digraph:
    """Simple directed graph; arcs are ordered pairs without self-loops."""

    n: int
    arcs: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc {(u, v)} out of range for n={self.n}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]] = ()) -> "Digraph":
        return cls(n, frozenset((u, v) for u, v in arcs))

    @cached_property
    def out_adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            adj[u].add(v)
        return tuple(frozenset(s) for s in adj)


# --- local modifications -------------------------------------------------


@dataclass(frozen=True)
class EdgeAdd:
    u: int
    v: int


@dataclass(frozen=True)
class EdgeDel:
    u: int
    v: int


@dataclass(frozen=True)
class VertexDel:
    v: int


@dataclass(frozen=True)
class VertexAdd:
    neighbors: frozenset[int]

    @classmethod
    def of(cls, neighbors: Iterable[int]) -> "VertexAdd":
        return cls(frozenset(neighbors))


LocalModification = EdgeAdd | EdgeDel | VertexDel | VertexAdd


def check_modification(g: Graph, m: LocalModification) -> None:
    """Raise ModificationInvalid unless ``m`` is applicable to ``g``."""
    if isinstance(m, EdgeAdd):
        if m.u == m.v:
            raise ModificationInvalid(f"edge addition with equal endpoints {m.u}")
        if not (0 <= m.u < g.n and 0 <= m.v < g.n):
            raise ModificationInvalid(f"edge addition {m} out of range")
        if g.has_edge(m.u, m.v):
            raise ModificationInvalid(f"edge {(m.u, m.v)} already present")
    elif isinstance(m, EdgeDel):
        if not (0 <= m.u < g.n and 0 <= m.v < g.n) or not g.has_edge(m.u, m.v):
            raise ModificationInvalid(f"edge {(m.u, m.v)} not present")
    elif isinstance(m, VertexDel):
        if not (0 <= m.v < g.n):
            raise ModificationInvalid(f"vertex {m.v} not in range(0, {g.n})")
    elif isinstance(m, VertexAdd):
        if any(not (0 <= w < g.n) for w in m.neighbors):
            raise ModificationInvalid("vertex addition neighbor out of range")
    else:
        raise ModificationInvalid(f"unknown modification {m!r}")


def apply_modification(g: Graph, m: LocalModification) -> Graph:
    """Return the modified graph; ``g`` itself is untouched.

    Vertex addition appends index ``g.n``; vertex deletion re-indexes the
    remaining vertices densely while preserving their labels.
    """
    check_modification(g, m)
    if isinstance(m, EdgeAdd):
        return Graph(g.n, g.edges | {normalize_edge(m.u, m.v)}, g.labels)
    if isinstance(m, EdgeDel):
        return Graph(g.n, g.edges - {normalize_edge(m.u, m.v)}, g.labels)
    if isinstance(m, VertexAdd):
        new = g.n
        added = {normalize_edge(w, new) for w in m.neighbors}
        labels = g.labels + (f"new_{new}",) if g.labels is not None else None
        return Graph(g.n + 1, g.edges | added, labels)
    # VertexDel: drop v, shift indices above it down by one.
    v = m.v
    remap = {w: (w if w < v else w - 1) for w in range(g.n) if w != v}
    edges = frozenset(
        normalize_edge(remap[a], remap[b]) for a, b in g.edges if v not in (a, b)
    )
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[w] for w in range(g.n) if w != v)
    return Graph(g.n - 1, edges, labels)


# --- components and unions ------------------------------------------------


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    result: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
        result.append(sorted(comp))
    return result


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph plus the index map back to ``g``.

    The returned tuple maps each new index to its original vertex; it is a
    bijection onto the chosen vertex set.
    """
    index_map = tuple(sorted(set(vertices)))
    for v in index_map:
        g._check_vertex(v)
    back = {old: new for new, old in enumerate(index_map)}
    edges = frozenset(
        normalize_edge(back[u], back[v])
        for u, v in g.edges
        if u in back and v in back
    )
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[old] for old in index_map)
    return Graph(len(index_map), edges, labels), index_map


def component_of(g: Graph, at: int | Edge) -> tuple[Graph, tuple[int, ...]]:
    """The component containing a vertex (or an edge's endpoints) as an
    induced subgraph, with the index map back to ``g``."""
    if isinstance(at, tuple):
        u, v = at
        g._check_vertex(u)
        g._check_vertex(v)
        start = u
    else:
        g._check_vertex(at)
        start = at
    for comp in components(g):
        if start in comp:
            return induced_subgraph(g, comp)
    raise AssertionError("unreachable: every vertex lies in a component")


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; ``g2``'s vertices are shifted up by ``g1.n``."""
    shift = g1.n
    edges = g1.edges | frozenset(
        normalize_edge(u + shift, v + shift) for u, v in g2.edges
    )
    labels = None
    if g1.labels is not None and g2.labels is not None:
        labels = g1.labels + g2.labels
    elif g1.labels is not None:
        labels = g1.labels + tuple(f"b{i}" for i in range(g2.n))
    elif g2.labels is not None:
        labels = tuple(f"a{i}" for i in range(g1.n)) + g2.labels
    return Graph(g1.n + g2.n, edges, labels)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


# --- small builders used throughout tests and gadgets ---------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
