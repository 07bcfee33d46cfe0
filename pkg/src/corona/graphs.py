"""Finite simple graphs, the named families, and the corona product.

Vertices are the integers ``0 .. n-1``.  Each graph also carries one display
label per vertex; the corona product uses ``y_i`` for the spine and
``x_{i,j}`` for the j-th vertex of the i-th copy of the inner graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import SpecError

__all__ = [
    "Graph",
    "CoronaLabeling",
    "GraphSpec",
    "Path",
    "Cycle",
    "Complete",
    "Star",
    "CompleteBipartite",
    "Null",
    "GraphUnion",
    "Corona",
    "Bristle",
    "Explicit",
    "build",
    "validate",
    "corona",
    "corona_with_labeling",
    "bristle",
    "isolated_vertices",
    "induced_subgraph",
    "disjoint_union",
    "is_complete",
    "is_null",
    "is_trivial",
    "from_edges",
]


@dataclass(frozen=True)
class Graph:
    """Immutable labeled simple graph.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  Equality is
    label-exact: two graphs are equal only if vertex counts, labels and
    adjacency all coincide.
    """

    n_vertices: int
    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _rows: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        n = self.n_vertices
        if len(self.labels) != n or len(self.adjacency) != n:
            raise SpecError("labels and adjacency must have one entry per vertex")
        if len(set(self.labels)) != n:
            raise SpecError("vertex labels must be unique")
        rows = []
        for v, nbrs in enumerate(self.adjacency):
            row = 0
            for w in nbrs:
                if w == v:
                    raise SpecError(f"self-loop at vertex {v}")
                if not 0 <= w < n:
                    raise SpecError(f"neighbour {w} of vertex {v} out of range")
                if v not in self.adjacency[w]:
                    raise SpecError(f"adjacency not symmetric for edge {v}-{w}")
                row |= 1 << w
            rows.append(row)
        object.__setattr__(self, "_rows", tuple(rows))

    @property
    def rows(self) -> tuple[int, ...]:
        """Neighbourhood of every vertex as an integer bitmask."""
        return self._rows

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    @property
    def all_mask(self) -> int:
        return (1 << self.n_vertices) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v in self.vertices for w in self.adjacency[v] if v < w]

    @property
    def n_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, v: int, w: int) -> bool:
        return bool(self._rows[v] >> w & 1)

    def __repr__(self) -> str:
        return f"Graph(n={self.n_vertices}, edges={self.edges()})"


def from_edges(
    n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
) -> Graph:
    """Build a graph on ``n`` vertices from 0-based edge pairs."""
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        if a == b:
            raise SpecError(f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise SpecError(f"edge {a}-{b} has an endpoint outside 0..{n - 1}")
        nbrs[a].add(b)
        nbrs[b].add(a)
    if labels is None:
        labels = [f"x_{i + 1}" for i in range(n)]
    return Graph(n, tuple(labels), tuple(tuple(sorted(s)) for s in nbrs))


# --------------------------------------------------------------------------
# Symbolic descriptions


@dataclass(frozen=True)
class Path:
    n: int

    def __str__(self) -> str:
        return f"path({self.n})"


@dataclass(frozen=True)
class Cycle:
    n: int

    def __str__(self) -> str:
        return f"cycle({self.n})"


@dataclass(frozen=True)
class Complete:
    n: int

    def __str__(self) -> str:
        return f"complete({self.n})"


@dataclass(frozen=True)
class Star:
    """The k-star: one centre joined to k leaves (k + 1 vertices)."""

    k: int

    def __str__(self) -> str:
        return f"star({self.k})"


@dataclass(frozen=True)
class CompleteBipartite:
    u: int
    v: int

    def __str__(self) -> str:
        return f"kbip({self.u},{self.v})"


@dataclass(frozen=True)
class Null:
    r: int

    def __str__(self) -> str:
        return f"null({self.r})"


@dataclass(frozen=True)
class GraphUnion:
    parts: tuple["GraphSpec", ...]

    def __str__(self) -> str:
        return f"union({','.join(str(p) for p in self.parts)})"


@dataclass(frozen=True)
class Corona:
    spine: "GraphSpec"
    inner: "GraphSpec"

    def __str__(self) -> str:
        return f"corona({self.spine},{self.inner})"


@dataclass(frozen=True)
class Bristle:
    spine: "GraphSpec"
    t: int

    def __str__(self) -> str:
        return f"bristle({self.spine},{self.t})"


@dataclass(frozen=True)
class Explicit:
    """Explicit graph; edge endpoints are 1-based as written in the DSL."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        body = ",".join(f"{a}-{b}" for a, b in self.edges)
        return f"graph({self.n};{body})"


GraphSpec = Union[
    Path, Cycle, Complete, Star, CompleteBipartite, Null, GraphUnion, Corona, Bristle, Explicit
]


def _need(cond: bool, what: str) -> None:
    if not cond:
        raise SpecError(what)


def validate(spec: GraphSpec) -> None:
    """Raise :class:`SpecError` naming the first violated parameter range."""
    match spec:
        case Path(n):
            _need(n >= 0, f"path({n}): n must be >= 0")
        case Cycle(n):
            _need(n >= 3, f"cycle({n}): n must be >= 3")
        case Complete(n):
            _need(n >= 1, f"complete({n}): n must be >= 1")
        case Star(k):
            _need(k >= 1, f"star({k}): k must be >= 1")
        case CompleteBipartite(u, v):
            _need(u >= 1 and v >= 1, f"kbip({u},{v}): both sides must be >= 1")
        case Null(r):
            _need(r >= 0, f"null({r}): r must be >= 0")
        case GraphUnion(parts):
            for p in parts:
                validate(p)
        case Corona(spine, inner):
            validate(spine)
            validate(inner)
        case Bristle(spine, t):
            validate(spine)
            _need(t >= 1, f"bristle(..., {t}): t must be >= 1")
        case Explicit(n, edges):
            _need(n >= 0, f"graph({n}; ...): n must be >= 0")
            seen = set()
            for a, b in edges:
                _need(1 <= a <= n and 1 <= b <= n, f"edge {a}-{b} outside 1..{n}")
                _need(a != b, f"edge {a}-{b} is a self-loop")
                key = (min(a, b), max(a, b))
                _need(key not in seen, f"edge {a}-{b} listed twice")
                seen.add(key)
        case _:
            raise SpecError(f"unknown graph description {spec!r}")


def build(spec: GraphSpec) -> Graph:
    """Materialise a symbolic description into a :class:`Graph`."""
    validate(spec)
    return _build(spec)


def _build(spec: GraphSpec) -> Graph:
    match spec:
        case Path(n):
            return from_edges(n, [(j, j + 1) for j in range(n - 1)])
        case Cycle(n):
            return from_edges(n, [(j, (j + 1) % n) for j in range(n)])
        case Complete(n):
            return from_edges(n, combinations(range(n), 2))
        case Star(k):
            return from_edges(k + 1, [(0, j) for j in range(1, k + 1)])
        case CompleteBipartite(u, v):
            return from_edges(u + v, [(a, u + b) for a in range(u) for b in range(v)])
        case Null(r):
            return from_edges(r, [])
        case GraphUnion(parts):
            return disjoint_union([_build(p) for p in parts])
        case Corona(spine, inner):
            return corona(_build(spine), _build(inner))
        case Bristle(spine, t):
            return bristle(_build(spine), t)
        case Explicit(n, edges):
            return from_edges(n, [(a - 1, b - 1) for a, b in edges])
    raise SpecError(f"unknown graph description {spec!r}")


# --------------------------------------------------------------------------
# Operations


@dataclass(frozen=True)
class CoronaLabeling:
    """Where the spine and each inner copy live inside a corona product."""

    spine_vertices: tuple[int, ...]
    copy_vertices: tuple[tuple[int, ...], ...]


def corona_with_labeling(X: Graph, H: Graph) -> tuple[Graph, CoronaLabeling]:
    """Corona product together with the spine/copy index map.

    Spine vertices come first, then the copies in spine order.  An empty
    inner graph leaves ``X`` untouched.
    """
    n, m = X.n_vertices, H.n_vertices
    if n == 0:
        raise SpecError("corona product needs a spine with at least one vertex")
    if m == 0:
        return X, CoronaLabeling(tuple(range(n)), tuple(() for _ in range(n)))

    copies = tuple(tuple(n + i * m + j for j in range(m)) for i in range(n))
    edges = list(X.edges())
    h_edges = H.edges()
    for i, copy in enumerate(copies):
        edges.extend((i, c) for c in copy)
        edges.extend((copy[a], copy[b]) for a, b in h_edges)
    labels = [f"y_{i + 1}" for i in range(n)]
    labels += [f"x_{{{i + 1},{j + 1}}}" for i in range(n) for j in range(m)]
    graph = from_edges(n * (m + 1), edges, labels)
    return graph, CoronaLabeling(tuple(range(n)), copies)


def corona(X: Graph, H: Graph) -> Graph:
    """The corona product ``X ⊙ H``."""
    return corona_with_labeling(X, H)[0]


def bristle(X: Graph, t: int) -> Graph:
    """Attach ``t`` pendant vertices to every vertex of ``X``.

    Built directly rather than through :func:`corona`; the two agree exactly
    with ``corona(X, null(t))``.
    """
    if t < 1:
        raise SpecError(f"bristle needs t >= 1, got {t}")
    n = X.n_vertices
    if n == 0:
        raise SpecError("bristled graph needs at least one vertex")
    edges = list(X.edges())
    labels = [f"y_{i + 1}" for i in range(n)]
    for i in range(n):
        for j in range(t):
            edges.append((i, n + i * t + j))
            labels.append(f"x_{{{i + 1},{j + 1}}}")
    return from_edges(n * (t + 1), edges, labels)


def isolated_vertices(G: Graph) -> frozenset[int]:
    return frozenset(v for v in G.vertices if not G.adjacency[v])


def induced_subgraph(G: Graph, U: Iterable[int]) -> Graph:
    """Subgraph on ``U`` keeping exactly the edges with both ends in ``U``.

    Vertices are renumbered in increasing order of their index in ``G``;
    labels are carried over.
    """
    keep = sorted(set(U))
    for v in keep:
        if not 0 <= v < G.n_vertices:
            raise SpecError(f"vertex {v} not in graph with {G.n_vertices} vertices")
    pos = {v: i for i, v in enumerate(keep)}
    adjacency = tuple(
        tuple(pos[w] for w in G.adjacency[v] if w in pos) for v in keep
    )
    return Graph(len(keep), tuple(G.labels[v] for v in keep), adjacency)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union; vertices are relabelled ``x_1 .. x_N`` in order."""
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((a + offset, b + offset) for a, b in g.edges())
        offset += g.n_vertices
    return from_edges(offset, edges)


def is_complete(G: Graph) -> bool:
    n = G.n_vertices
    return all(len(a) == n - 1 for a in G.adjacency)


def is_null(G: Graph) -> bool:
    return G.n_edges == 0


def is_trivial(G: Graph) -> bool:
    return G.n_vertices == 1
