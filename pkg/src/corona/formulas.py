"""Closed forms for the invariants of ``S/I(X ⊙ H)``.

The spine ``X`` is one of the named families (path, cycle, complete graph,
star, complete bipartite graph) or a disjoint union of them.  The inner
graph ``H`` enters only through a handful of numbers collected in
:class:`BaseInvariants`: depth, Stanley-depth lower bound, regularity and
Krull dimension of the ring of ``H'`` (``H`` with its isolated vertices
deleted), plus the number of isolated vertices of ``H``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil
from typing import Union

from . import combinatorics as comb
from .errors import NeedsOracleError, SpecError
from .graphs import (
    Complete,
    CompleteBipartite,
    Cycle,
    Graph,
    GraphUnion,
    Null,
    Path,
    Star,
    induced_subgraph,
    is_complete,
)
from .oracle import (
    DEFAULT_MAX_ORACLE_VERTICES,
    DEFAULT_MAX_SDEPTH_VERTICES,
    betti_table,
    sdepth_oracle,
)

__all__ = [
    "SpineFamily",
    "UnionOfFamilies",
    "BaseInvariants",
    "InvariantReport",
    "spine_family",
    "spine_order",
    "recognize_family",
    "base_invariants",
    "depth_formula",
    "sdepth_formula",
    "reg_formula",
    "pdim_formula",
    "krull_dim_formula",
    "is_cm_formula",
    "formula_report",
]


@dataclass(frozen=True)
class UnionOfFamilies:
    parts: tuple["SpineFamily", ...]


SpineFamily = Union[Path, Cycle, Complete, Star, CompleteBipartite, UnionOfFamilies]


def _half_up(a: int) -> int:
    return -(-a // 2)


def spine_family(spec) -> SpineFamily | None:
    """Return ``spec`` as a covered spine family, or ``None``.

    ``null(r)`` is read as a union of ``r`` trivial graphs; unions flatten.
    """
    match spec:
        case Path(n) if n >= 1:
            return spec
        case Cycle(n) if n >= 3:
            return spec
        case Complete(n) if n >= 1:
            return spec
        case Star(k) if k >= 1:
            return spec
        case CompleteBipartite(u, v) if u >= 1 and v >= 1:
            return spec
        case Null(r) if r >= 1:
            return Path(1) if r == 1 else UnionOfFamilies(tuple(Path(1) for _ in range(r)))
        case GraphUnion(parts) if parts:
            fams = []
            for p in parts:
                f = spine_family(p)
                if f is None:
                    return None
                fams.extend(f.parts if isinstance(f, UnionOfFamilies) else [f])
            return fams[0] if len(fams) == 1 else UnionOfFamilies(tuple(fams))
        case UnionOfFamilies(parts) if parts:
            return spec
    return None


def spine_order(X: SpineFamily) -> int:
    match X:
        case Path(n) | Cycle(n) | Complete(n):
            return n
        case Star(k):
            return k + 1
        case CompleteBipartite(u, v):
            return u + v
        case UnionOfFamilies(parts):
            return sum(spine_order(p) for p in parts)
    raise SpecError(f"not a spine family: {X!r}")


def _check_range(X: SpineFamily) -> None:
    match X:
        case Path(n) | Complete(n):
            ok = n >= 1
        case Cycle(n):
            ok = n >= 3
        case Star(k):
            ok = k >= 1
        case CompleteBipartite(u, v):
            ok = u >= 1 and v >= 1
        case UnionOfFamilies(parts):
            for p in parts:
                _check_range(p)
            ok = bool(parts)
        case _:
            raise SpecError(f"not a spine family: {X!r}")
    if not ok:
        raise SpecError(f"spine {X} is outside the range covered by the closed forms")


# --------------------------------------------------------------------------
# Inner-graph data


@dataclass(frozen=True)
class BaseInvariants:
    """What the corona formulas need to know about the inner graph ``H``.

    ``depth_h``, ``sdepth_h_lower``, ``reg_h`` and ``dim_h`` refer to the
    ring of ``H'``; they are all zero when ``H`` has no edges.
    """

    depth_h: int
    sdepth_h_lower: int
    reg_h: int
    dim_h: int
    iso_count: int
    vertex_count: int
    is_null: bool
    is_complete: bool
    sdepth_exact: bool
    provenance: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.iso_count <= self.vertex_count:
            raise ValueError("isolated-vertex count out of range")
        if self.is_null and (self.depth_h or self.sdepth_h_lower or self.reg_h or self.dim_h):
            raise ValueError("a graph without edges has all base invariants zero")
        if self.is_null and self.iso_count != self.vertex_count:
            raise ValueError("every vertex of a graph without edges is isolated")


@dataclass(frozen=True)
class _Piece:
    depth: int
    sdepth: int
    reg: int
    dim: int
    exact: bool
    source: str


def recognize_family(G: Graph) -> tuple[str, tuple[int, ...]] | None:
    """Identify a connected graph with at least one edge as one of
    ``complete``, ``path``, ``cycle``, ``star`` or ``kbip``."""
    n, e = G.n_vertices, G.n_edges
    if n < 2 or len(comb.connected_components(G)) != 1:
        return None
    degs = sorted(G.degree(v) for v in G.vertices)
    if is_complete(G):
        return ("complete", (n,))
    if e == n - 1 and degs[-1] <= 2:
        return ("path", (n,))
    if e == n and degs[0] == degs[-1] == 2:
        return ("cycle", (n,))
    if e == n - 1 and degs[-1] == n - 1:
        return ("star", (n - 1,))
    side = [-1] * n
    side[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w in G.adjacency[v]:
            if side[w] < 0:
                side[w] = 1 - side[v]
                stack.append(w)
            elif side[w] == side[v]:
                return None
    u = side.count(0)
    if e == u * (n - u):
        return ("kbip", tuple(sorted((u, n - u))))
    return None


def _closed_form(kind: str, params: tuple[int, ...]) -> _Piece:
    match kind:
        case "complete":
            return _Piece(1, 1, 1, 1, True, f"complete({params[0]}) closed form")
        case "path":
            m = params[0]
            # Known lower bound for the Stanley depth of a path quotient.
            return _Piece(ceil(m / 3), ceil(m / 3), ceil((m - 1) / 3), ceil(m / 2), m <= 3,
                          f"path({m}) closed form")
        case "cycle":
            q = params[0]
            return _Piece(ceil((q - 1) / 3), ceil((q - 1) / 3), (q + 1) // 3, ceil((q - 1) / 2),
                          False, f"cycle({q}) closed form")
        case "star":
            return _Piece(1, 1, 1, params[0], True, f"star({params[0]}) closed form")
        case "kbip":
            u, v = params
            return _Piece(1, 1, 1, max(u, v), False, f"kbip({u},{v}) closed form")
    raise ValueError(kind)


def base_invariants(
    H: Graph,
    oracle_allowed: bool = True,
    *,
    char: int = 0,
    max_oracle_vertices: int = DEFAULT_MAX_ORACLE_VERTICES,
    max_sdepth_vertices: int = DEFAULT_MAX_SDEPTH_VERTICES,
) -> BaseInvariants:
    """Collect the inner-graph numbers used by the corona formulas.

    Each component of ``H'`` is matched against the named families; an
    unmatched component is evaluated by the Hochster oracle (and the Stanley
    depth search when small enough), or ``NeedsOracleError`` is raised.
    Depth, regularity and dimension add over components; the Stanley depth
    of a tensor product is only bounded below by the sum.
    """
    iso = [v for v in H.vertices if not H.adjacency[v]]
    m = H.n_vertices
    if len(iso) == m:
        return BaseInvariants(0, 0, 0, 0, m, m, True, m == 1, True,
                              ("inner graph has no edges",))
    core = induced_subgraph(H, [v for v in H.vertices if H.adjacency[v]])
    pieces = []
    for comp in comb.connected_components(core):
        part = induced_subgraph(core, comp)
        fam = recognize_family(part)
        if fam is not None:
            pieces.append(_closed_form(*fam))
            continue
        if not oracle_allowed:
            raise NeedsOracleError(
                f"inner component on {part.n_vertices} vertices is not a named family"
            )
        table = betti_table(part, char, max_vertices=max_oracle_vertices)
        dim = comb.independence_number(part).size
        if part.n_vertices <= max_sdepth_vertices:
            sd, exact = sdepth_oracle(part, max_vertices=max_sdepth_vertices), True
        else:
            sd, exact = 0, False
        pieces.append(_Piece(table.depth, sd, table.reg, dim, exact,
                             f"oracle-backed base invariants ({part.n_vertices} vertices)"))
    return BaseInvariants(
        depth_h=sum(p.depth for p in pieces),
        sdepth_h_lower=sum(p.sdepth for p in pieces),
        reg_h=sum(p.reg for p in pieces),
        dim_h=sum(p.dim for p in pieces),
        iso_count=len(iso),
        vertex_count=m,
        is_null=False,
        is_complete=is_complete(H),
        sdepth_exact=len(pieces) == 1 and pieces[0].exact,
        provenance=tuple(p.source for p in pieces),
    )


# --------------------------------------------------------------------------
# Formulas


def _require_inner(B: BaseInvariants) -> None:
    if B.vertex_count < 1:
        raise SpecError("the closed forms need an inner graph with at least one vertex")


def _linear(X: SpineFamily, a: int) -> int:
    """Depth-type closed form with ``a`` = (depth or sdepth of H') + |i(H)|."""
    match X:
        case Path(n):
            return _half_up(n) + _half_up(n - 1) * a
        case Cycle(n):
            return _half_up(n - 1) + _half_up(n) * a
        case Complete(n):
            return 1 + (n - 1) * a
        case Star(k):
            return k + a
        case CompleteBipartite(u, v):
            return min(u, v) * a + max(u, v)
        case UnionOfFamilies(parts):
            return sum(_linear(p, a) for p in parts)
    raise SpecError(f"not a spine family: {X!r}")


def depth_formula(X: SpineFamily, B: BaseInvariants) -> int:
    _check_range(X)
    _require_inner(B)
    return _linear(X, B.depth_h + B.iso_count)


def _is_trivial_spine(X: SpineFamily) -> bool:
    return isinstance(X, (Path, Complete)) and X.n == 1


def sdepth_formula(X: SpineFamily, B: BaseInvariants) -> tuple[int, bool]:
    """Stanley-depth value and whether it is known to be exact.

    The value is exact for a trivial spine (it is always 1) and for an inner
    graph without edges; otherwise it is a lower bound.
    """
    _check_range(X)
    _require_inner(B)
    value = _linear(X, B.sdepth_h_lower + B.iso_count)
    single = not isinstance(X, UnionOfFamilies)
    exact = single and (_is_trivial_spine(X) or B.is_null)
    return value, exact


def _reg(X: SpineFamily, B: BaseInvariants) -> int:
    match X:
        case Path(n):
            return _half_up(n) if B.is_null else n * B.reg_h
        case Cycle(n):
            return _half_up(n - 1) if B.is_null else n * B.reg_h
        case Complete(n):
            return 1 if B.is_null else n * B.reg_h
        case Star(k):
            return k if B.is_null else (k + 1) * B.reg_h
        case CompleteBipartite(u, v):
            return max(u, v) if B.is_null else (u + v) * B.reg_h
        case UnionOfFamilies(parts):
            return sum(_reg(p, B) for p in parts)
    raise SpecError(f"not a spine family: {X!r}")


def reg_formula(X: SpineFamily, B: BaseInvariants) -> int:
    if isinstance(X, Path) and X.n == 0:
        return 0
    _check_range(X)
    _require_inner(B)
    return _reg(X, B)


def pdim_formula(X: SpineFamily, B: BaseInvariants) -> int:
    return spine_order(X) * (B.vertex_count + 1) - depth_formula(X, B)


def krull_dim_formula(n_spine: int, B: BaseInvariants) -> int:
    """Krull dimension for an arbitrary spine with ``n_spine`` vertices."""
    if n_spine < 1:
        raise SpecError("the spine must have at least one vertex")
    return n_spine * (B.dim_h + B.iso_count)


def is_cm_formula(X: SpineFamily | None, H: Graph) -> str:
    """``"yes"``/``"no"`` for a covered spine, ``"not-covered"`` otherwise."""
    if X is None or H.n_vertices == 0:
        return "not-covered"
    try:
        _check_range(X)
    except SpecError:
        return "not-covered"
    return "yes" if is_complete(H) else "no"


# --------------------------------------------------------------------------
# Reports


_SPINE_NOTES = {
    Path: ("depth: ceil(n/2) + ceil((n-1)/2)*(t + i)", "reg: ceil(n/2) if H has no edges else n*r"),
    Cycle: ("depth: ceil((n-1)/2) + ceil(n/2)*(t + i)", "reg: ceil((n-1)/2) if H has no edges else n*r"),
    Complete: ("depth: 1 + (n-1)*(t + i)", "reg: 1 if H has no edges else n*r"),
    Star: ("depth: n + t + i", "reg: n if H has no edges else (n+1)*r"),
    CompleteBipartite: ("depth: min(u,v)*(t + i) + max(u,v)", "reg: max(u,v) if H has no edges else (u+v)*r"),
}


@dataclass(frozen=True)
class InvariantReport:
    depth: int
    sdepth: int | None
    sdepth_exact: bool
    reg: int
    pdim: int
    dim: int
    cohen_macaulay: str
    provenance: tuple[str, ...]
    n_vertices: int

    def __post_init__(self) -> None:
        if self.pdim + self.depth != self.n_vertices:
            raise AssertionError("pdim + depth must equal the number of variables")

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "sdepth": {"value": self.sdepth, "exact": self.sdepth_exact},
            "reg": self.reg,
            "pdim": self.pdim,
            "dim": self.dim,
            "cohen_macaulay": self.cohen_macaulay,
            "provenance": list(self.provenance),
        }


def _notes(X: SpineFamily) -> list[str]:
    if isinstance(X, UnionOfFamilies):
        out = ["spine is a disjoint union: depth, reg, dim add over components"]
        for p in X.parts:
            out.extend(_notes(p))
        return out
    return [f"{X} spine " + s for s in _SPINE_NOTES[type(X)]]


def formula_report(X: SpineFamily, H: Graph, B: BaseInvariants) -> InvariantReport:
    depth = depth_formula(X, B)
    sdepth, exact = sdepth_formula(X, B)
    n_spine = spine_order(X)
    notes = _notes(X)
    notes.append("dim: |V(X)|*(dim(H') + i)")
    notes.append("pdim: |V| - depth")
    notes.append("Cohen-Macaulay iff H is complete")
    notes.extend(B.provenance)
    return InvariantReport(
        depth=depth,
        sdepth=sdepth,
        sdepth_exact=exact,
        reg=reg_formula(X, B),
        pdim=pdim_formula(X, B),
        dim=krull_dim_formula(n_spine, B),
        cohen_macaulay=is_cm_formula(X, H),
        provenance=tuple(notes),
        n_vertices=n_spine * (B.vertex_count + 1),
    )
