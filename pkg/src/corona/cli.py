"""Command-line entry point: ``corona invariants|compare|table|cm|betti``.

Exit codes: 0 success (for ``compare``: everything matched), 1 a formula
disagreed with the oracle, 2 the description could not be parsed or is out
of range, 3 an instance exceeded a vertex cap.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from contextlib import contextmanager

import click

from .dsl import parse_grid, parse_spec
from .errors import CapacityError, NeedsOracleError, SpecError
from .formulas import is_cm_formula, spine_family
from .graphs import build
from .oracle import betti_table, dim_oracle
from .report import (
    TABLE_FAMILIES,
    RunConfig,
    compare_many,
    invariants,
    parse_range,
    render_rows,
    split_corona,
    table_rows,
    table_specs,
)

EXIT_MISMATCH = 1
EXIT_SPEC = 2
EXIT_CAPACITY = 3


@contextmanager
def _exit_codes():
    try:
        yield
    except CapacityError as exc:
        click.echo(f"capacity error: {exc}", err=True)
        sys.exit(EXIT_CAPACITY)
    except (SpecError, NeedsOracleError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_SPEC)


def _config(char, max_oracle, max_sdepth, fmt, workers) -> RunConfig:
    try:
        return RunConfig.from_env(
            char=char,
            max_oracle_vertices=max_oracle,
            max_sdepth_vertices=max_sdepth,
            fmt=fmt,
            workers=workers,
        )
    except ValueError as exc:
        raise click.BadParameter(str(exc))


def _oracle_options(f):
    f = click.option("--workers", type=int, default=None, help="Worker processes for grids.")(f)
    f = click.option("--max-sdepth-vertices", "max_sdepth", type=int, default=None,
                     help="Cap for the Stanley depth search (default 10).")(f)
    f = click.option("--max-oracle-vertices", "max_oracle", type=int, default=None,
                     help="Cap for Hochster evaluation (default 20; env CORONA_MAX_ORACLE).")(f)
    f = click.option("--char", type=int, default=None,
                     help="Field characteristic, 0 or a prime (env CORONA_CHAR).")(f)
    return f


@click.group()
def main():
    """Invariants of edge ideals of corona products X ⊙ H."""


@main.command("invariants")
@click.argument("spec")
@_oracle_options
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="json")
def invariants_cmd(spec, char, max_oracle, max_sdepth, workers, fmt):
    """Depth, Stanley depth, regularity, pdim, dimension and Cohen-Macaulayness."""
    config = _config(char, max_oracle, max_sdepth, fmt, workers)
    with _exit_codes():
        parsed = parse_spec(spec)
        report = invariants(parsed, config)
    if fmt == "json":
        click.echo(json.dumps(report.to_json(), indent=2))
        return
    row = {
        "spec": str(parsed),
        "n_vertices": report.n_vertices,
        "depth": report.depth,
        "sdepth": report.sdepth,
        "sdepth_exact": report.sdepth_exact,
        "reg": report.reg,
        "pdim": report.pdim,
        "dim": report.dim,
        "cm": report.cohen_macaulay,
        "provenance": "; ".join(report.provenance),
    }
    if fmt == "csv":
        click.echo(render_rows([row], "csv"), nl=False)
        return
    bound = "exact" if report.sdepth_exact else "lower bound"
    click.echo(f"spec: {parsed}  ({report.n_vertices} vertices)")
    click.echo(f"depth = {report.depth}")
    click.echo(f"sdepth = {report.sdepth} ({bound})" if report.sdepth is not None else "sdepth = n/a")
    click.echo(f"reg = {report.reg}")
    click.echo(f"pdim = {report.pdim}")
    click.echo(f"dim = {report.dim}")
    click.echo(f"cohen_macaulay = {report.cohen_macaulay}")
    for note in report.provenance:
        click.echo(f"  - {note}")


@main.command("compare")
@click.argument("grid")
@_oracle_options
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="text")
@click.option("--timing", is_flag=True, help="Include wall-clock seconds per record.")
def compare_cmd(grid, char, max_oracle, max_sdepth, workers, fmt, timing):
    """Check the closed forms against the oracles on a spec or a grid.

    GRID is a description such as ``corona(cycle(3),cycle(3))`` or a grid
    like ``path(1..3) x {null(1..2), path(2..3), complete(2..3)}``.
    """
    config = _config(char, max_oracle, max_sdepth, fmt, workers)
    with _exit_codes():
        specs = parse_grid(grid)
        records = compare_many(specs, config)
    ok = all(r.match for r in records)
    if fmt == "json":
        payload = {"all_match": ok, "records": [r.to_json(timing) for r in records]}
        click.echo(json.dumps(payload, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        cols = ["spec", "invariant", "formula", "oracle", "match"] + (["seconds"] if timing else [])
        writer = csv.DictWriter(buf, fieldnames=cols + ["cite"], lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for r in records:
            writer.writerow(r.to_json(timing))
        click.echo(buf.getvalue(), nl=False)
    else:
        for r in records:
            status = "ok      " if r.match else "MISMATCH"
            line = f"{status} {r.spec} {r.invariant}: formula={r.formula} oracle={r.oracle}"
            if timing:
                line += f" ({r.seconds:.3f}s)"
            if not r.match:
                line += f"  [{r.cite}]"
            click.echo(line)
        bad = sum(not r.match for r in records)
        click.echo(f"{len(records)} checks, {bad} mismatches")
    sys.exit(0 if ok else EXIT_MISMATCH)


@main.command("table")
@click.argument("family", type=click.Choice(TABLE_FAMILIES))
@click.option("--n", "n_range", default="1..4", show_default=True, help="Spine parameter range a..b.")
@click.option("--m", "m_range", default="1..4", show_default=True,
              help="Inner parameter range (leaf count for bristle-* families).")
@click.option("--s", "s_range", default=None, help="Alias of --m for bristle-* families.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]), default="csv")
def table_cmd(family, n_range, m_range, s_range, fmt):
    """Closed-form invariants over a parameter grid.

    Columns: spec, n_vertices, depth, sdepth, sdepth_exact, reg, pdim, dim,
    cm, provenance.
    """
    with _exit_codes():
        try:
            n_vals = parse_range(n_range)
            m_vals = parse_range(s_range if s_range is not None else m_range)
        except ValueError as exc:
            raise SpecError(f"bad range: {exc}")
        rows = table_rows(table_specs(family, n_vals, m_vals))
    click.echo(render_rows(rows, fmt), nl=False)


@main.command("cm")
@click.argument("spec")
@click.option("--oracle", "use_oracle", is_flag=True, help="Also decide by depth = dim with the oracle.")
@_oracle_options
def cm_cmd(spec, use_oracle, char, max_oracle, max_sdepth, workers):
    """Cohen-Macaulayness of S/I(X ⊙ H): yes, no or not-covered."""
    config = _config(char, max_oracle, max_sdepth, "text", workers)
    with _exit_codes():
        parsed = parse_spec(spec)
        build(parsed)
        spine, inner = split_corona(parsed)
        verdict = "not-covered"
        if spine is not None:
            verdict = is_cm_formula(spine_family(spine), build(inner))
        click.echo(f"formula: {verdict}")
        if use_oracle:
            G = build(parsed)
            table = betti_table(G, config.char, max_vertices=config.max_oracle_vertices)
            click.echo(f"oracle: {'yes' if table.depth == dim_oracle(G) else 'no'}")


@main.command("betti")
@click.argument("spec")
@_oracle_options
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
def betti_cmd(spec, char, max_oracle, max_sdepth, workers, fmt):
    """Graded Betti table of S/I(G) from Hochster's formula."""
    config = _config(char, max_oracle, max_sdepth, "json", workers)
    with _exit_codes():
        G = build(parse_spec(spec))
        table = betti_table(G, config.char, max_vertices=config.max_oracle_vertices)
    if fmt == "json":
        click.echo(json.dumps(table.to_json()))
    else:
        click.echo(table.format())


if __name__ == "__main__":  # pragma: no cover
    main()
