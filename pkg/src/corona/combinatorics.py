"""Exact combinatorial invariants: independence number, induced matching
number, chordality and connected components."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .graphs import Graph, from_edges

__all__ = [
    "DEFAULT_MAX_VERTICES",
    "IndependentSetResult",
    "InducedMatchingResult",
    "independence_number",
    "max_independent_set_mask",
    "induced_matching_number",
    "is_induced_matching",
    "edge_conflict_graph",
    "is_chordal",
    "max_cardinality_search",
    "connected_components",
    "component_masks",
    "iter_bits",
]

DEFAULT_MAX_VERTICES = 63


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class IndependentSetResult:
    size: int
    witness: frozenset[int]


@dataclass(frozen=True)
class InducedMatchingResult:
    size: int
    witness: frozenset[tuple[int, int]]


def _check_cap(G: Graph, max_vertices: int) -> None:
    if G.n_vertices > max_vertices:
        raise CapacityError(
            f"graph has {G.n_vertices} vertices; exact search is capped at {max_vertices}"
        )


def _clique_cover_bound(rows: tuple[int, ...], cand: int) -> int:
    # Greedy colouring of the complement: each class is a clique of G.
    cliques = 0
    remaining = cand
    while remaining:
        cliques += 1
        clique = 0
        free = remaining
        while free:
            v = (free & -free).bit_length() - 1
            clique |= 1 << v
            free &= rows[v]
        remaining &= ~clique
    return cliques


def max_independent_set_mask(rows: tuple[int, ...], cand: int) -> int:
    """Maximum independent set inside the vertex set ``cand`` (bitmasks).

    Branch and bound on a highest-degree vertex, with a greedy clique cover
    as the upper bound.  Vertices of degree <= 1 are taken greedily, which
    never loses optimality.
    """
    best = [0, 0]  # size, mask

    def search(cand: int, chosen: int, size: int) -> None:
        while True:
            forced = 0
            for v in iter_bits(cand):
                if (rows[v] & cand).bit_count() <= 1:
                    forced = v + 1
                    break
            if not forced:
                break
            v = forced - 1
            chosen |= 1 << v
            size += 1
            cand &= ~(rows[v] | (1 << v))
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + _clique_cover_bound(rows, cand) <= best[0]:
            return
        pivot, pivot_deg = -1, -1
        for v in iter_bits(cand):
            d = (rows[v] & cand).bit_count()
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        bit = 1 << pivot
        search(cand & ~(rows[pivot] | bit), chosen | bit, size + 1)
        search(cand & ~bit, chosen, size)

    search(cand, 0, 0)
    return best[1]


def independence_number(
    G: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> IndependentSetResult:
    _check_cap(G, max_vertices)
    mask = max_independent_set_mask(G.rows, G.all_mask)
    return IndependentSetResult(mask.bit_count(), frozenset(iter_bits(mask)))


def edge_conflict_graph(G: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Graph on the edges of ``G``; two edges conflict when they share an
    endpoint or an edge of ``G`` joins one to the other."""
    edges = G.edges()
    closed = [G.rows[a] | G.rows[b] | (1 << a) | (1 << b) for a, b in edges]
    conflicts = []
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if closed[i] >> c & 1 or closed[i] >> d & 1:
                conflicts.append((i, j))
    return from_edges(len(edges), conflicts), edges


def induced_matching_number(
    G: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> InducedMatchingResult:
    _check_cap(G, max_vertices)
    conflict, edges = edge_conflict_graph(G)
    mask = max_independent_set_mask(conflict.rows, conflict.all_mask)
    witness = frozenset(edges[i] for i in iter_bits(mask))
    return InducedMatchingResult(len(witness), witness)


def is_induced_matching(G: Graph, matching) -> bool:
    ends = [v for e in matching for v in e]
    if len(set(ends)) != len(ends):
        return False
    span = set(ends)
    induced = {(a, b) for a, b in G.edges() if a in span and b in span}
    return induced == {(min(e), max(e)) for e in matching}


def max_cardinality_search(G: Graph) -> list[int]:
    """Visit order of maximum cardinality search, ties to the lowest index."""
    weight = [0] * G.n_vertices
    seen = [False] * G.n_vertices
    order = []
    for _ in range(G.n_vertices):
        v = max((w for w in G.vertices if not seen[w]), key=lambda w: (weight[w], -w))
        seen[v] = True
        order.append(v)
        for w in G.adjacency[v]:
            if not seen[w]:
                weight[w] += 1
    return order


def is_chordal(G: Graph) -> bool:
    """True iff ``G`` has no induced cycle of length > 3.

    The reverse of an MCS order is a perfect elimination ordering exactly
    when the graph is chordal; the PEO is checked with the usual
    parent-neighbourhood test.
    """
    order = max_cardinality_search(G)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in G.adjacency[v] if pos[w] < pos[v]]
        if len(earlier) < 2:
            continue
        parent = max(earlier, key=pos.__getitem__)
        need = 0
        for w in earlier:
            if w != parent:
                need |= 1 << w
        if need & ~G.rows[parent]:
            return False
    return True


def component_masks(rows: tuple[int, ...], mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``."""
    comps = []
    while mask:
        seed = mask & -mask
        comp = frontier = seed
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier ^= 1 << v
            new = rows[v] & mask & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        mask &= ~comp
    return comps


def connected_components(G: Graph) -> list[frozenset[int]]:
    return [frozenset(iter_bits(c)) for c in component_masks(G.rows, G.all_mask)]
