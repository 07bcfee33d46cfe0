from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from corona.graphs import Graph, from_edges


@st.composite
def graphs(draw, min_vertices: int = 0, max_vertices: int = 7) -> Graph:
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edges(n, chosen)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_chordal_graph(rng: random.Random, n: int) -> Graph:
    """Add vertices one at a time, each joined to a random clique of the
    graph so far; the reverse insertion order is a perfect elimination
    ordering."""
    adj: list[set[int]] = []
    edges = []
    for v in range(n):
        clique: list[int] = []
        if v and rng.random() < 0.9:
            seed = rng.randrange(v)
            clique = [seed]
            for w in rng.sample(sorted(adj[seed]), len(adj[seed])):
                if rng.random() < 0.6 and all(w in adj[c] for c in clique):
                    clique.append(w)
        adj.append(set(clique))
        for c in clique:
            adj[c].add(v)
            edges.append((c, v))
    return from_edges(n, edges)


# Brute-force oracles kept independent of the library's search code.


def brute_independence_number(G: Graph) -> int:
    best = 0
    for mask in range(1 << G.n_vertices):
        if mask.bit_count() > best and all(not (G.rows[v] & mask) for v in range(G.n_vertices) if mask >> v & 1):
            best = mask.bit_count()
    return best


def brute_induced_matching_number(G: Graph) -> int:
    edges = G.edges()
    best = 0
    for k in range(1, len(edges) + 1):
        found = False
        for sub in combinations(edges, k):
            ends = [v for e in sub for v in e]
            if len(set(ends)) != len(ends):
                continue
            span = set(ends)
            if sum(1 for a, b in edges if a in span and b in span) == k:
                found = True
                break
        if not found:
            break
        best = k
    return best


def brute_sdepth(G: Graph) -> int:
    """Max over all interval partitions of the face poset of min |top|,
    with no restriction on the interval shapes."""
    n = G.n_vertices
    faces = [m for m in range(1 << n) if all(not (G.rows[v] & m) for v in range(n) if m >> v & 1)]
    face_set = set(faces)
    order = sorted(faces, key=lambda f: (f.bit_count(), f))
    best = -1

    def interval(C: int, D: int) -> list[int]:
        free = D & ~C
        out, sub = [], free
        while True:
            out.append(C | sub)
            if sub == 0:
                return out
            sub = (sub - 1) & free

    def search(covered: frozenset, current: int) -> None:
        nonlocal best
        if current <= best:
            return
        rest = [f for f in order if f not in covered]
        if not rest:
            best = current
            return
        C = rest[0]
        for D in faces:
            if C & ~D == 0:
                members = interval(C, D)
                if all(F in face_set and F not in covered for F in members):
                    search(covered | frozenset(members), min(current, D.bit_count()))

    search(frozenset(), n + 1)
    return best


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261019)


# Acceptance criteria report one line each at the end of the run.

_ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def acceptance():
    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE[number] = (title, ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok, detail = _ACCEPTANCE[number]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
