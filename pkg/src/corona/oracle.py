"""Ground-truth invariants of ``S/I(G)`` for small graphs.

Nothing here uses a closed form.  Betti numbers come from Hochster's formula

    beta_{i,j}(S/I(G)) = sum over |W| = j of rank H~_{j-i-1}(Ind(G)|_W),

depth from Auslander-Buchsbaum, Krull dimension from the independence
number, and Stanley depth from an exhaustive search over interval
partitions of the face poset of the independence complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .combinatorics import independence_number, iter_bits
from .errors import CapacityError
from .graphs import Graph
from .homology import IndependenceHomology, SimplicialComplex, independence_complex_faces

__all__ = [
    "DEFAULT_MAX_ORACLE_VERTICES",
    "DEFAULT_MAX_SDEPTH_VERTICES",
    "BettiTable",
    "IntervalPartition",
    "independence_complex",
    "betti_table",
    "pdim_reg_depth_from_betti",
    "dim_oracle",
    "sdepth_oracle",
    "stanley_partition",
    "is_cm_oracle",
    "check_char",
]

DEFAULT_MAX_ORACLE_VERTICES = 20
DEFAULT_MAX_SDEPTH_VERTICES = 10


def check_char(char: int) -> int:
    """Validate a field characteristic (0 or a prime)."""
    if char == 0:
        return 0
    if char < 2 or any(char % d == 0 for d in range(2, int(char**0.5) + 1)):
        raise ValueError(f"characteristic must be 0 or a prime, got {char}")
    return char


def _cap(G: Graph, limit: int, what: str) -> None:
    if G.n_vertices > limit:
        raise CapacityError(f"{what} is capped at {limit} vertices; graph has {G.n_vertices}")


def independence_complex(G: Graph, max_vertices: int = DEFAULT_MAX_ORACLE_VERTICES) -> SimplicialComplex:
    _cap(G, max_vertices, "independence complex")
    return SimplicialComplex(G.n_vertices, frozenset(independence_complex_faces(G.rows, G.all_mask)))


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of ``S/I`` as a sparse map ``(i, j) -> beta``."""

    n_vars: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def pdim(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def depth(self) -> int:
        return self.n_vars - self.pdim

    def total(self, i: int) -> int:
        return sum(b for (a, _), b in self.entries.items() if a == i)

    def to_json(self) -> dict:
        return {"n": self.n_vars, "entries": [[i, j, b] for (i, j), b in sorted(self.entries.items())]}

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        return cls(int(data["n"]), {(int(i), int(j)): int(b) for i, j, b in data["entries"]})

    def support_ok(self) -> bool:
        """``beta_{0,0} = 1``, nothing else in row 0, and ``i <= j <= n``."""
        if self[0, 0] != 1:
            return False
        for (i, j), b in self.entries.items():
            if b <= 0 or j < i or j > self.n_vars or (i == 0 and j != 0):
                return False
        return True

    def format(self) -> str:
        """Macaulay2-style text table: rows are j - i, columns are i."""
        cols = range(self.pdim + 1)
        lines = ["      " + " ".join(f"{i:>4}" for i in cols)]
        lines.append("total:" + " ".join(f"{self.total(i):>4}" for i in cols))
        for d in range(self.reg + 1):
            cells = [self[i, i + d] for i in cols]
            lines.append(f"{d:>5}:" + " ".join(f"{c:>4}" if c else "   ." for c in cells))
        return "\n".join(lines)


def betti_table(
    G: Graph,
    char: int = 0,
    *,
    max_vertices: int = DEFAULT_MAX_ORACLE_VERTICES,
    method: str = "reduced",
) -> BettiTable:
    """Full graded Betti table of ``S/I(G)`` over a field of characteristic
    ``char``, by Hochster's formula over all vertex subsets."""
    _cap(G, max_vertices, "Hochster evaluation")
    check_char(char)
    hom = IndependenceHomology(G.rows, char, method)
    entries: dict[tuple[int, int], int] = {}
    # Subsets in increasing order; each vector is independent of the others,
    # and the accumulation below is order-insensitive.
    for W in range(1 << G.n_vertices):
        vec = hom.vector(W)
        if not vec:
            continue
        j = W.bit_count()
        for s, r in enumerate(vec):
            if r:
                key = (j - s, j)
                entries[key] = entries.get(key, 0) + r
    return BettiTable(G.n_vertices, entries)


def pdim_reg_depth_from_betti(T: BettiTable) -> tuple[int, int, int]:
    return T.pdim, T.reg, T.depth


def dim_oracle(G: Graph, max_vertices: int = 63) -> int:
    return independence_number(G, max_vertices).size


def is_cm_oracle(G: Graph, char: int = 0, *, max_vertices: int = DEFAULT_MAX_ORACLE_VERTICES) -> bool:
    return betti_table(G, char, max_vertices=max_vertices).depth == dim_oracle(G)


# --------------------------------------------------------------------------
# Stanley depth


@dataclass(frozen=True)
class IntervalPartition:
    """Intervals ``[C, D]`` (bitmask pairs, ``C ⊆ D``) of a face poset."""

    intervals: tuple[tuple[int, int], ...]

    @property
    def sdepth(self) -> int:
        return min(D.bit_count() for _, D in self.intervals)

    def covers_exactly(self, faces: Iterable[int]) -> bool:
        seen: set[int] = set()
        for C, D in self.intervals:
            if C & ~D:
                return False
            free = D & ~C
            sub = free
            while True:
                F = C | sub
                if F in seen:
                    return False
                seen.add(F)
                if sub == 0:
                    break
                sub = (sub - 1) & free
        return seen == set(faces)


def _partition_with_tops(faces: list[int], rows: tuple[int, ...], k: int) -> list[tuple[int, int]] | None:
    """Try to cover every face of size < k by disjoint intervals whose top has
    exactly k elements.  Faces of size >= k left over become singletons."""
    small = sorted((f for f in faces if f.bit_count() < k), key=lambda f: (f.bit_count(), f))
    if not small:
        return []
    tops = [f for f in faces if f.bit_count() == k]
    if not tops:
        return None
    face_index = {f: i for i, f in enumerate(small + tops)}
    # intervals available from each small face
    options: dict[int, list[tuple[int, int]]] = {}
    for C in small:
        opts = []
        for D in tops:
            if C & ~D == 0:
                members = 0
                free = D & ~C
                sub = free
                while True:
                    members |= 1 << face_index[C | sub]
                    if sub == 0:
                        break
                    sub = (sub - 1) & free
                opts.append((D, members))
        if not opts:
            return None
        options[C] = opts

    n_small = len(small)
    small_mask = (1 << n_small) - 1
    failed: set[int] = set()
    chosen: list[tuple[int, int]] = []

    def solve(covered: int) -> bool:
        rest = ~covered & small_mask
        if not rest:
            return True
        if covered in failed:
            return False
        C = small[(rest & -rest).bit_length() - 1]
        for D, members in options[C]:
            if members & covered == 0:
                chosen.append((C, D))
                if solve(covered | members):
                    return True
                chosen.pop()
        failed.add(covered)
        return False

    return list(chosen) if solve(0) else None


def stanley_partition(G: Graph, k: int) -> IntervalPartition | None:
    """An interval partition of the faces of ``Ind(G)`` with every top of
    size >= k, or ``None`` if none exists."""
    faces = independence_complex_faces(G.rows, G.all_mask)
    found = _partition_with_tops(faces, G.rows, k)
    if found is None:
        return None
    covered = set()
    for C, D in found:
        free = D & ~C
        sub = free
        while True:
            covered.add(C | sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
    singles = tuple((f, f) for f in sorted(faces) if f not in covered)
    return IntervalPartition(tuple(found) + singles)


def sdepth_oracle(G: Graph, *, max_vertices: int = DEFAULT_MAX_SDEPTH_VERTICES) -> int:
    """Exact Stanley depth of ``S/I(G)``.

    Feasibility of "every interval top has size >= k" is monotone in k, so
    the answer is found by binary search on ``0 .. dim``.
    """
    _cap(G, max_vertices, "Stanley depth search")
    faces = independence_complex_faces(G.rows, G.all_mask)
    lo, hi = 0, max(f.bit_count() for f in faces)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _partition_with_tops(faces, G.rows, mid) is not None:
            lo = mid
        else:
            hi = mid - 1
    return lo
