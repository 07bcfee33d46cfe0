"""Pipelines behind the CLI: single-spec reports, formula-vs-oracle
comparison over grids, and closed-form tables."""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import combinatorics as comb
from .dsl import IntRange
from .errors import CapacityError, SpecError
from .formulas import (
    InvariantReport,
    base_invariants,
    formula_report,
    krull_dim_formula,
    spine_family,
)
from .graphs import (
    Bristle,
    Complete,
    CompleteBipartite,
    Corona,
    Cycle,
    GraphSpec,
    Null,
    Path,
    Star,
    build,
    validate,
)
from .oracle import (
    DEFAULT_MAX_ORACLE_VERTICES,
    DEFAULT_MAX_SDEPTH_VERTICES,
    betti_table,
    check_char,
    sdepth_oracle,
)

__all__ = [
    "RunConfig",
    "ComparisonRecord",
    "split_corona",
    "invariants",
    "oracle_report",
    "compare",
    "compare_many",
    "table_specs",
    "table_rows",
    "render_rows",
    "parse_range",
    "CSV_COLUMNS",
    "TABLE_FAMILIES",
]

CSV_COLUMNS = ("spec", "n_vertices", "depth", "sdepth", "sdepth_exact", "reg", "pdim", "dim", "cm", "provenance")


@dataclass(frozen=True)
class RunConfig:
    char: int = 0
    max_oracle_vertices: int = DEFAULT_MAX_ORACLE_VERTICES
    max_sdepth_vertices: int = DEFAULT_MAX_SDEPTH_VERTICES
    fmt: str = "json"
    workers: int = 1

    def __post_init__(self) -> None:
        check_char(self.char)
        if self.max_oracle_vertices < 1 or self.max_sdepth_vertices < 1:
            raise ValueError("vertex caps must be positive")
        if self.workers < 1:
            raise ValueError("worker count must be positive")
        if self.fmt not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.fmt!r}")

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        """Environment defaults (``CORONA_CHAR``, ``CORONA_MAX_ORACLE``,
        ``CORONA_MAX_SDEPTH``) overridden by any non-``None`` keyword."""
        env = {
            "char": os.environ.get("CORONA_CHAR"),
            "max_oracle_vertices": os.environ.get("CORONA_MAX_ORACLE"),
            "max_sdepth_vertices": os.environ.get("CORONA_MAX_SDEPTH"),
        }
        values = {k: int(v) for k, v in env.items() if v not in (None, "")}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


def split_corona(spec: GraphSpec) -> tuple[GraphSpec | None, GraphSpec | None]:
    """``(spine, inner)`` of a corona or bristle description, else ``(None, None)``."""
    match spec:
        case Corona(spine, inner):
            return spine, inner
        case Bristle(spine, t):
            return spine, Null(t)
    return None, None


def _base(H, config: RunConfig):
    return base_invariants(
        H,
        True,
        char=config.char,
        max_oracle_vertices=config.max_oracle_vertices,
        max_sdepth_vertices=config.max_sdepth_vertices,
    )


def invariants(spec: GraphSpec, config: RunConfig = RunConfig()) -> InvariantReport:
    """Closed forms when the spine is a covered family, the oracle otherwise."""
    validate(spec)
    spine, inner = split_corona(spec)
    if spine is not None:
        family = spine_family(spine)
        H = build(inner)
        if family is not None and H.n_vertices >= 1:
            return formula_report(family, H, _base(H, config))
    return oracle_report(spec, config)


def oracle_report(spec: GraphSpec, config: RunConfig = RunConfig()) -> InvariantReport:
    G = build(spec)
    table = betti_table(G, config.char, max_vertices=config.max_oracle_vertices)
    notes = [f"Hochster Betti table over characteristic {config.char}", "depth: |V| - pdim"]
    spine, inner = split_corona(spec)
    H = build(inner) if inner is not None else None
    if spine is not None and H is not None and H.n_vertices >= 1:
        dim = krull_dim_formula(build(spine).n_vertices, _base(H, config))
        notes.append("dim: |V(X)|*(dim(H') + i)")
    else:
        dim = comb.independence_number(G).size
        notes.append("dim: independence number")
    if G.n_vertices <= config.max_sdepth_vertices:
        sdepth, exact = sdepth_oracle(G, max_vertices=config.max_sdepth_vertices), True
        notes.append("sdepth: interval partition search")
    else:
        sdepth, exact = None, False
    return InvariantReport(
        depth=table.depth,
        sdepth=sdepth,
        sdepth_exact=exact,
        reg=table.reg,
        pdim=table.pdim,
        dim=dim,
        cohen_macaulay="yes" if table.depth == dim else "no",
        provenance=tuple(notes),
        n_vertices=G.n_vertices,
    )


# --------------------------------------------------------------------------
# Comparison


@dataclass(frozen=True)
class ComparisonRecord:
    spec: str
    invariant: str
    formula: object
    oracle: object
    match: bool
    seconds: float = field(default=0.0, compare=False)
    cite: str = ""

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "spec": self.spec,
            "invariant": self.invariant,
            "formula": self.formula,
            "oracle": self.oracle,
            "match": self.match,
        }
        if not self.match:
            out["cite"] = self.cite
        if timing:
            out["seconds"] = round(self.seconds, 4)
        return out


def _cite(report: InvariantReport, key: str) -> str:
    marker = "Cohen-Macaulay" if key == "cm" else f"{key}:"
    return "; ".join(p for p in report.provenance if marker in p)


def compare(spec: GraphSpec, config: RunConfig = RunConfig()) -> list[ComparisonRecord]:
    """Formula values next to oracle values for one corona instance."""
    validate(spec)
    spine, inner = split_corona(spec)
    if spine is None:
        raise SpecError(f"{spec} is not a corona or bristle description; nothing to compare")
    G = build(spec)
    if G.n_vertices > config.max_oracle_vertices:
        raise CapacityError(
            f"{spec}: {G.n_vertices} vertices exceeds the oracle cap {config.max_oracle_vertices}"
        )
    H = build(inner)
    family = spine_family(spine)
    label = str(spec)
    start = time.perf_counter()
    table = betti_table(G, config.char, max_vertices=config.max_oracle_vertices)
    alpha = comb.independence_number(G).size
    oracle_cm = "yes" if table.depth == alpha else "no"
    records = []

    if family is None or H.n_vertices == 0:
        B = _base(H, config) if H.n_vertices else None
        if B is not None:
            dim = krull_dim_formula(build(spine).n_vertices, B)
            records.append(ComparisonRecord(label, "dim", dim, alpha, dim == alpha,
                                            time.perf_counter() - start, "dim: |V(X)|*(dim(H') + i)"))
        return records

    report = formula_report(family, H, _base(H, config))
    elapsed = time.perf_counter() - start
    for name, f_val, o_val in (
        ("depth", report.depth, table.depth),
        ("reg", report.reg, table.reg),
        ("pdim", report.pdim, table.pdim),
        ("dim", report.dim, alpha),
        ("cm", report.cohen_macaulay, oracle_cm),
    ):
        records.append(ComparisonRecord(label, name, f_val, o_val, f_val == o_val, elapsed,
                                        _cite(report, name)))
    if G.n_vertices <= config.max_sdepth_vertices:
        t0 = time.perf_counter()
        sd = sdepth_oracle(G, max_vertices=config.max_sdepth_vertices)
        ok = report.sdepth == sd if report.sdepth_exact else report.sdepth <= sd
        name = "sdepth" if report.sdepth_exact else "sdepth_lower"
        records.append(ComparisonRecord(label, name, report.sdepth, sd, ok,
                                        time.perf_counter() - t0, _cite(report, "depth")))
    return records


def _compare_job(args):
    spec, config = args
    return compare(spec, config)


def compare_many(specs: list[GraphSpec], config: RunConfig = RunConfig()) -> list[ComparisonRecord]:
    """Run :func:`compare` over many instances; output order follows input."""
    for spec in specs:
        validate(spec)
        spine, _ = split_corona(spec)
        if spine is None:
            raise SpecError(f"{spec} is not a corona or bristle description; nothing to compare")
        n = build(spec).n_vertices
        if n > config.max_oracle_vertices:
            raise CapacityError(f"{spec}: {n} vertices exceeds the oracle cap {config.max_oracle_vertices}")
    jobs = [(s, config) for s in specs]
    if config.workers == 1 or len(jobs) < 2:
        chunks = [_compare_job(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            chunks = list(pool.map(_compare_job, jobs))
    return [r for chunk in chunks for r in chunk]


# --------------------------------------------------------------------------
# Tables

TABLE_FAMILIES = (
    "path", "cycle", "complete", "star", "kbip",
    "bristle-path", "bristle-cycle", "bristle-complete", "bristle-star", "bristle-kbip",
)

_FAMILY = {"path": Path, "cycle": Cycle, "complete": Complete, "star": Star}


def parse_range(text: str) -> range:
    """``"a..b"`` or ``"a"``; an empty string or ``b < a`` gives an empty range."""
    text = text.strip()
    if not text:
        return range(0)
    if ".." in text:
        lo, hi = text.split("..", 1)
        return IntRange(int(lo), int(hi)).values()
    return range(int(text), int(text) + 1)


def table_specs(family: str, n_range: range, m_range: range) -> list[GraphSpec]:
    """Instances of a table family.

    ``path``/``cycle``/``complete``/``star`` pair the family with itself
    (``X_n ⊙ X_m``); ``kbip`` pairs ``K_{u,v}`` (u, v over ``n_range``) with
    ``K_{a,b}`` (a, b over ``m_range``).  ``bristle-*`` families attach
    ``s`` leaves per vertex with ``s`` over ``m_range``.
    """
    if family not in TABLE_FAMILIES:
        raise SpecError(f"unknown table family {family!r}; choose from {', '.join(TABLE_FAMILIES)}")
    base = family.removeprefix("bristle-")
    if base == "kbip":
        spines = [CompleteBipartite(u, v) for u in n_range for v in n_range]
    else:
        spines = [_FAMILY[base](n) for n in n_range]
    if family.startswith("bristle-"):
        return [Bristle(x, s) for x in spines for s in m_range]
    if base == "kbip":
        inners = [CompleteBipartite(a, b) for a in m_range for b in m_range]
    else:
        inners = [_FAMILY[base](m) for m in m_range]
    return [Corona(x, h) for x in spines for h in inners]


def table_rows(specs: list[GraphSpec]) -> list[dict]:
    rows = []
    for spec in specs:
        validate(spec)
        spine, inner = split_corona(spec)
        family = spine_family(spine)
        H = build(inner)
        report = formula_report(family, H, base_invariants(H, oracle_allowed=False))
        rows.append(_row(str(spec), report))
    return rows


def _row(spec: str, r: InvariantReport) -> dict:
    return {
        "spec": spec,
        "n_vertices": r.n_vertices,
        "depth": r.depth,
        "sdepth": r.sdepth,
        "sdepth_exact": r.sdepth_exact,
        "reg": r.reg,
        "pdim": r.pdim,
        "dim": r.dim,
        "cm": r.cohen_macaulay,
        "provenance": "; ".join(r.provenance),
    }


def render_rows(rows: list[dict], fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "text":
        lines = []
        for row in rows:
            lines.append("  ".join(f"{k}={row[k]}" for k in CSV_COLUMNS if k != "provenance"))
        return "\n".join(lines) + ("\n" if lines else "")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("true" if v is True else "false" if v is False else v) for k, v in row.items()})
    return buf.getvalue()
