#!/usr/bin/env python3
"""
Tree Cover Lab CLI

Computes tree cover numbers and related parameters of small graphs, generates
the extremal families, and runs the theorem-verification harness over
exhaustively enumerated graphs.
"""

import json
import logging
import sys
from contextlib import contextmanager
from typing import Callable, Iterator, List, Optional

import click
import yaml

from . import __version__
from .config import ConfigLoader, LabConfig
from .errors import EXIT_USAGE, EXIT_VIOLATION, LabError, PreconditionError, UnsupportedSizeError
from .extremal import (
    CoreKind,
    EvenSpec,
    generate_cycle_triangle,
    generate_even_extremal,
    generate_family_F,
    generate_friendship,
    generate_k_tree,
)
from .formats import parse_edge_list, parse_graph6, to_edge_list, to_graph6
from .graph import Graph
from .harness import (
    THEOREMS,
    TRIANGLE_FREE_CONJECTURE,
    VerificationReport,
    compute as compute_parameters,
    count_graphs,
    run_theorem,
    scan_conjecture_triangle_free,
    select_theorems,
)
from .reports import ReportWriter

GENERATOR_FAMILIES = ["F", "even-extremal", "friendship", "ktree", "cycle-triangle"]


class LabGroup(click.Group):
    """Click group whose subcommand usage errors exit with status 1."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except click.UsageError as exc:
            exc.exit_code = EXIT_USAGE
            raise


@contextmanager
def _lab_errors() -> Iterator[None]:
    """Report library errors on stderr and exit with their status code."""
    try:
        yield
    except LabError as exc:
        click.echo(f"Error: {exc}", err=True)
        click.get_current_context().exit(exc.exit_code)


@contextmanager
def _progress(label: str, length: int) -> Iterator[Optional[Callable[[int], None]]]:
    if not sys.stdout.isatty() or length == 0:
        yield None
        return
    with click.progressbar(length=length, label=label) as bar:
        yield bar.update


def _load_graph(config: LabConfig, graph6_text: Optional[str], edges_file: Optional[str]) -> Graph:
    if graph6_text is not None:
        g = parse_graph6(graph6_text)
    else:
        try:
            with open(edges_file, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as exc:
            raise click.FileError(edges_file, hint=exc.strerror or str(exc))
        g = parse_edge_list(text)
    if g.n > config.budgets.max_vertices:
        raise UnsupportedSizeError("compute", g.n, config.budgets.max_vertices)
    return g


def _echo_report(report: VerificationReport) -> None:
    click.echo(
        f"{report.theorem}: {report.graphs_checked} checked, {report.skipped} skipped, "
        f"{len(report.violations)} violation(s) in {report.runtime_seconds:.2f}s"
    )
    for violation in report.violations:
        click.echo(f"  {violation.graph6} {json.dumps(violation.observed)}")


def _write_reports(
    reports: List[VerificationReport], out: Optional[str], summary: Optional[str]
) -> None:
    if out:
        ReportWriter.save_json(ReportWriter.to_document(reports), out)
        click.echo(f"Report saved to: {out}")
    if summary:
        ReportWriter.save_summary(reports, summary)
        click.echo(f"Summary saved to: {summary}")


@click.group(cls=LabGroup)
@click.version_option(version=__version__, prog_name="treecover-lab")
@click.option(
    "--config",
    "-c",
    "config_path",
    type=click.Path(dir_okay=False),
    help="YAML configuration file path (default: ./treecover-lab.yaml if present)",
)
@click.option("--verbose", "-v", count=True, help="-v for progress logs, -vv for solver detail")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], verbose: int):
    """Tree cover number laboratory for small graphs."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        ctx.obj = ConfigLoader.load_config(config_path)
    except (FileNotFoundError, ValueError, yaml.YAMLError) as exc:
        raise click.ClickException(f"Invalid configuration: {exc}")


@cli.command()
@click.option("--graph6", "graph6_text", help="Graph in graph6 format")
@click.option("--edges", "edges_file", type=click.Path(dir_okay=False), help="Edge list file")
@click.option(
    "--params",
    default="n,m,T",
    show_default=True,
    help="Comma-separated parameters: n, m, girth, alpha, treewidth, outerplanar, "
    "T, T_cover, P, Z, Zplus, blocks, extremal, bounds",
)
@click.pass_obj
def compute(config: LabConfig, graph6_text: Optional[str], edges_file: Optional[str], params: str):
    """Compute parameters of one graph and print them as JSON."""
    if (graph6_text is None) == (edges_file is None):
        raise click.UsageError("Give exactly one of --graph6 or --edges")

    with _lab_errors():
        g = _load_graph(config, graph6_text, edges_file)
        record = compute_parameters(g, params, config)
    click.echo(json.dumps(record))


@cli.command()
@click.option("--theorems", help="Comma-separated theorem ids, or 'all'")
@click.option("--nmax", type=click.IntRange(min=1), help="Largest order checked for every theorem")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the JSON report here")
@click.option("--summary", type=click.Path(dir_okay=False), help="Write a Markdown summary here")
@click.option("--workers", type=click.IntRange(min=1), help="Worker processes")
@click.pass_obj
def verify(
    config: LabConfig,
    theorems: Optional[str],
    nmax: Optional[int],
    out: Optional[str],
    summary: Optional[str],
    workers: Optional[int],
):
    """Check theorems over every graph in their families."""
    selection = theorems or config.harness.theorems or "all"
    try:
        chosen = select_theorems(selection)
    except PreconditionError as exc:
        raise click.UsageError(str(exc))

    workers = workers or config.harness.workers
    reports = []
    with _lab_errors():
        for theorem in chosen:
            bound = nmax if nmax is not None else config.harness.n_max_for(
                theorem.id, theorem.default_n_max
            )
            length = count_graphs(theorem, bound, config) if sys.stdout.isatty() else 0
            with _progress(theorem.id, length) as progress:
                report = run_theorem(theorem, bound, config, workers, progress)
            reports.append(report)
            _echo_report(report)

    _write_reports(reports, out or config.harness.out, summary or config.harness.summary)

    failed = [r.theorem for r in reports if not r.passed]
    if failed:
        click.echo(f"Violations found for: {', '.join(failed)}", err=True)
        sys.exit(EXIT_VIOLATION)
    click.echo(f"All {len(reports)} theorem(s) verified.")


@cli.command()
@click.option(
    "--family",
    type=click.Choice(["triangle-free"]),
    default="triangle-free",
    show_default=True,
    help="Graph family to scan",
)
@click.option("--nmax", type=click.IntRange(min=1), help="Largest order scanned")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the JSON report here")
@click.option("--workers", type=click.IntRange(min=1), help="Worker processes")
@click.pass_obj
def scan(config: LabConfig, family: str, nmax: Optional[int], out: Optional[str], workers: Optional[int]):
    """Scan a conjecture; violations are reported as findings, never as failures."""
    bound = nmax if nmax is not None else config.harness.n_max_for(
        TRIANGLE_FREE_CONJECTURE.id, TRIANGLE_FREE_CONJECTURE.default_n_max
    )
    workers = workers or config.harness.workers

    with _lab_errors():
        length = (
            count_graphs(TRIANGLE_FREE_CONJECTURE, bound, config) if sys.stdout.isatty() else 0
        )
        with _progress(family, length) as progress:
            report = scan_conjecture_triangle_free(bound, config, workers, progress)

    _echo_report(report)
    _write_reports([report], out, None)
    if report.violations:
        click.echo("Counterexamples to the conjecture were found; see the report.")


@cli.command()
@click.option("--family", type=click.Choice(GENERATOR_FAMILIES), required=True)
@click.option("--blocks", type=int, default=1, show_default=True, help="Triangle blocks (F, even-extremal)")
@click.option("--other-blocks", type=int, default=1, show_default=True, help="Second side (even-extremal case 2)")
@click.option(
    "--case",
    type=click.IntRange(1, 3),
    default=1,
    show_default=True,
    help="even-extremal: 1 leaf, 2 bridge, 3 core with triangles",
)
@click.option("--core", type=click.Choice([c.value for c in CoreKind]), default="C4", show_default=True)
@click.option("--r", "r", type=int, default=3, show_default=True, help="Cycle length (cycle-triangle)")
@click.option("--triangles", type=int, default=0, show_default=True, help="Triangles glued to the core")
@click.option("-k", "k", type=int, default=3, show_default=True, help="k for ktree, triangles for friendship")
@click.option("-n", "order", type=int, default=8, show_default=True, help="Order of the k-tree")
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=0, show_default=True)
@click.option(
    "--format", "fmt", type=click.Choice(["graph6", "edges"]), default="graph6", show_default=True
)
def gen(
    family: str,
    blocks: int,
    other_blocks: int,
    case: int,
    core: str,
    r: int,
    triangles: int,
    k: int,
    order: int,
    seed: int,
    fmt: str,
):
    """Generate a member of an extremal family."""
    with _lab_errors():
        if family == "F":
            g = generate_family_F(blocks, seed)
        elif family == "even-extremal":
            spec = EvenSpec(case, blocks, other_blocks, CoreKind(core), r, triangles)
            g = generate_even_extremal(spec, seed)
        elif family == "friendship":
            g = generate_friendship(k)
        elif family == "ktree":
            g = generate_k_tree(k, order, seed)
        else:
            g = generate_cycle_triangle(r)

    if fmt == "graph6":
        click.echo(to_graph6(g))
    else:
        click.echo(to_edge_list(g), nl=False)


@cli.command(name="theorems")
def list_theorems():
    """List the registered theorem ids."""
    for theorem in THEOREMS.values():
        click.echo(f"{theorem.id}: {theorem.statement}")
        click.echo(f"    {theorem.describe()}")
        if theorem.note:
            click.echo(f"    note: {theorem.note}")


if __name__ == "__main__":
    cli()
