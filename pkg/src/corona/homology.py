"""Simplicial complexes, boundary matrices and exact reduced homology.

Ranks over the rationals use fraction-free (Bareiss) elimination on integer
matrices; ranks over a prime field use plain Gaussian elimination mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .combinatorics import component_masks, iter_bits

__all__ = [
    "SimplicialComplex",
    "bareiss_rank",
    "rank_mod_p",
    "matrix_rank",
    "boundary_matrix",
    "reduced_homology_ranks",
    "reduced_homology_vector",
    "independence_complex_faces",
    "IndependenceHomology",
]


def bareiss_rank(matrix: list[list[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free elimination."""
    m = [row[:] for row in matrix if any(row)]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        prow = m[rank]
        for r in range(rank + 1, n_rows):
            row = m[r]
            f = row[col]
            if f:
                for c in range(col + 1, n_cols):
                    row[c] = (p * row[c] - f * prow[c]) // prev
            else:
                for c in range(col + 1, n_cols):
                    row[c] = (p * row[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def rank_mod_p(matrix: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in matrix]
    m = [row for row in m if any(row)]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        prow = [(x * inv) % p for x in m[rank]]
        m[rank] = prow
        for r in range(rank + 1, n_rows):
            f = m[r][col]
            if f:
                row = m[r]
                for c in range(col, n_cols):
                    row[c] = (row[c] - f * prow[c]) % p
        rank += 1
        if rank == n_rows:
            break
    return rank


def matrix_rank(matrix: list[list[int]], char: int = 0) -> int:
    if not matrix or not matrix[0]:
        return 0
    return bareiss_rank(matrix) if char == 0 else rank_mod_p(matrix, char)


@dataclass(frozen=True)
class SimplicialComplex:
    """Finite abstract simplicial complex on ``0 .. n-1``.

    Faces are stored as bitmasks; the empty face (mask 0) is always present.
    """

    n: int
    faces: frozenset[int]

    def __post_init__(self) -> None:
        if 0 not in self.faces:
            raise ValueError("the empty face must belong to every complex")

    @classmethod
    def from_facets(cls, n: int, facets) -> "SimplicialComplex":
        faces = {0}
        for facet in facets:
            verts = sorted(facet)
            for k in range(1, len(verts) + 1):
                for sub in combinations(verts, k):
                    faces.add(sum(1 << v for v in sub))
        return cls(n, frozenset(faces))

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.faces) - 1

    def faces_of_dim(self, d: int) -> list[int]:
        return sorted(f for f in self.faces if f.bit_count() == d + 1)

    def is_closed(self) -> bool:
        return all(f & ~(1 << v) in self.faces for f in self.faces for v in iter_bits(f))

    def restrict(self, mask: int) -> "SimplicialComplex":
        return SimplicialComplex(self.n, frozenset(f for f in self.faces if f & ~mask == 0))


def boundary_matrix(rows_faces: list[int], cols_faces: list[int]) -> list[list[int]]:
    """Matrix of the simplicial boundary from ``cols_faces`` (dim d) to
    ``rows_faces`` (dim d-1).  Vertices are ordered by index and removing the
    vertex in position k contributes sign (-1)^k."""
    index = {f: i for i, f in enumerate(rows_faces)}
    mat = [[0] * len(cols_faces) for _ in rows_faces]
    for j, face in enumerate(cols_faces):
        for k, v in enumerate(iter_bits(face)):
            mat[index[face ^ (1 << v)]][j] = -1 if k % 2 else 1
    return mat


def reduced_homology_vector(faces_by_size: list[list[int]], char: int = 0) -> list[int]:
    """Reduced Betti numbers from faces grouped by cardinality.

    ``faces_by_size[s]`` lists the faces with ``s`` vertices, ``s = 0`` being
    the empty face.  Entry ``s`` of the result is the rank of reduced
    homology in dimension ``s - 1``.
    """
    top = len(faces_by_size)
    ranks = [0] * (top + 1)  # ranks[s]: rank of boundary out of size-s faces
    for s in range(1, top):
        if faces_by_size[s] and faces_by_size[s - 1]:
            ranks[s] = matrix_rank(boundary_matrix(faces_by_size[s - 1], faces_by_size[s]), char)
    return [len(faces_by_size[s]) - ranks[s] - ranks[s + 1] for s in range(top)]


def reduced_homology_ranks(K: SimplicialComplex, char: int = 0) -> dict[int, int]:
    """Map ``d -> rank H̃_d(K)`` for ``d = -1 .. dim K``."""
    top = K.dim + 2
    by_size: list[list[int]] = [[] for _ in range(top)]
    for f in sorted(K.faces):
        by_size[f.bit_count()].append(f)
    vec = reduced_homology_vector(by_size, char)
    return {s - 1: r for s, r in enumerate(vec)}


def independence_complex_faces(rows: tuple[int, ...], mask: int) -> list[int]:
    """All independent subsets of ``mask`` (including the empty set)."""
    out = []

    def grow(face: int, cand: int) -> None:
        out.append(face)
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(face | low, cand & ~rows[v])

    grow(0, mask)
    return out


def _faces_by_size(faces: list[int]) -> list[list[int]]:
    top = max(f.bit_count() for f in faces) + 1
    by_size: list[list[int]] = [[] for _ in range(top)]
    for f in sorted(faces):
        by_size[f.bit_count()].append(f)
    return by_size


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _trim(v) -> tuple[int, ...]:
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return tuple(v)


class IndependenceHomology:
    """Reduced homology of independence complexes of induced subgraphs.

    ``vector(mask)`` returns a tuple ``h`` with ``h[s]`` the rank of
    ``H̃_{s-1}(Ind(G[mask]))`` (trailing zeros trimmed; ``()`` means
    acyclic).  With ``method="direct"`` every value comes from boundary
    matrices of the full complex.  With ``method="reduced"`` the following
    homotopy facts are applied first, and boundary matrices are only built
    for connected pieces where none applies:

    * an isolated vertex makes the complex a cone (acyclic);
    * a disjoint union gives a join, whose reduced homology over a field is
      the convolution of the factors;
    * if ``N(u) ⊆ N(v)`` for ``u != v`` then deleting ``v`` is a homotopy
      equivalence;
    * if ``v`` is simplicial, ``Ind(G)`` is a wedge over ``w ∈ N(v)`` of
      suspensions of ``Ind(G - N[w])``.
    """

    def __init__(self, rows: tuple[int, ...], char: int = 0, method: str = "reduced"):
        if method not in ("reduced", "direct"):
            raise ValueError(f"unknown homology method {method!r}")
        self.rows = rows
        self.char = char
        self.method = method
        self._cache: dict[int, tuple[int, ...]] = {}

    def direct(self, mask: int) -> tuple[int, ...]:
        faces = independence_complex_faces(self.rows, mask)
        return _trim(reduced_homology_vector(_faces_by_size(faces), self.char))

    def vector(self, mask: int) -> tuple[int, ...]:
        cached = self._cache.get(mask)
        if cached is not None:
            return cached
        if self.method == "direct":
            result = self.direct(mask)
        else:
            result = self._reduced(mask)
        self._cache[mask] = result
        return result

    def _reduced(self, mask: int) -> tuple[int, ...]:
        rows = self.rows
        if mask == 0:
            return (1,)
        for v in iter_bits(mask):
            if not rows[v] & mask:
                return ()
        comps = component_masks(rows, mask)
        if len(comps) > 1:
            out: tuple[int, ...] = (1,)
            for c in comps:
                out = _poly_mul(out, self.vector(c))
                if not out:
                    return ()
            return out
        verts = list(iter_bits(mask))
        nbr = {v: rows[v] & mask for v in verts}
        for u in verts:
            nu = nbr[u]
            for v in verts:
                if v != u and nu & ~nbr[v] == 0:
                    return self.vector(mask & ~(1 << v))
        for v in verts:
            nv = nbr[v]
            if all(nv & ~(1 << w) & ~nbr[w] == 0 for w in iter_bits(nv)):
                acc: list[int] = []
                for w in iter_bits(nv):
                    sub = self.vector(mask & ~(nbr[w] | (1 << w)))
                    if len(sub) + 1 > len(acc):
                        acc.extend([0] * (len(sub) + 1 - len(acc)))
                    for s, r in enumerate(sub):
                        acc[s + 1] += r
                return _trim(acc)
        return self.direct(mask)
