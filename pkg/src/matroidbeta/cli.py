"""Command-line surface: compute invariants, emit catalogs, run verification."""

from __future__ import annotations

import json
import os
import sys

import click

from . import catalogs as cat
from .ehrhart import ehrhart_polynomial, shift_by_minus_one
from .invariants import beta_definition
from .lattice_paths import LatticePath, lattice_path_matroid
from .matroids import InvalidBasesError, format_matroid, parse_matroid


def _load_matroid(path: str, skip_validation: bool):
    try:
        with open(path, "r", encoding="ascii") as fh:
            return parse_matroid(fh.read(), validate=not skip_validation)
    except (OSError, InvalidBasesError) as exc:
        raise click.ClickException(f"{path}: {exc}") from exc


@click.group()
def main():
    """Exact beta-invariants and Ehrhart polynomials of matroid base polytopes."""


@main.group()
def compute():
    """Compute a single invariant from a matroid or path pair."""


@compute.command("beta")
@click.argument("matroid_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--skip-validation", is_flag=True, help="Skip the exchange-axiom check.")
def compute_beta(matroid_file, skip_validation):
    """Print the beta-invariant of the matroid in MATROID_FILE."""
    matroid = _load_matroid(matroid_file, skip_validation)
    click.echo(beta_definition(matroid))


@compute.command("ehrhart")
@click.argument("matroid_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--shifted", is_flag=True, help="Print ehr(M, t-1) instead of ehr(M, t).")
@click.option("--json", "as_json", is_flag=True, help="Emit exact JSON coefficients.")
@click.option("--skip-validation", is_flag=True, help="Skip the exchange-axiom check.")
def compute_ehrhart(matroid_file, shifted, as_json, skip_validation):
    """Print the Ehrhart polynomial of the matroid's base polytope."""
    matroid = _load_matroid(matroid_file, skip_validation)
    poly = ehrhart_polynomial(matroid)
    if shifted:
        poly = shift_by_minus_one(poly)
    if as_json:
        click.echo(json.dumps(poly.to_json_dict(), sort_keys=True))
    else:
        click.echo(str(poly))


@compute.command("lpm")
@click.option("--lower", required=True, help="Lower bounding path, e.g. EEENENNEN.")
@click.option("--upper", required=True, help="Upper bounding path, e.g. NEENENNEE.")
def compute_lpm(lower, upper):
    """Print the lattice-path matroid of the bounding paths as a matroid file."""
    try:
        matroid = lattice_path_matroid(LatticePath(lower), LatticePath(upper))
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(format_matroid(matroid), nl=False)


@main.command()
@click.option("--exhaustive", "exhaustive_n", type=int, default=None,
              help="Verify every labeled matroid on [n] (n <= 6).")
@click.option("--snakes", nargs=2, type=int, default=None,
              help="Verify all snakes of the given size and rank.")
@click.option("--file", "files", multiple=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Verify the matroid(s) in the given file(s).")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
@click.option("--workers", type=int, default=None,
              help="Worker processes (default: available parallelism).")
@click.option("--skip-validation", is_flag=True, help="Skip the exchange-axiom check on files.")
def verify(exhaustive_n, snakes, files, csv_path, json_path, workers, skip_validation):
    """Verify the beta / shifted-Ehrhart identity on a catalog of matroids.

    Exits 0 iff every eligible matroid passes; entries with loops, coloops,
    or degenerate rank are reported as rejections, not failures.
    """
    sources = [exhaustive_n is not None, bool(snakes), bool(files)]
    if sum(sources) != 1:
        raise click.UsageError("choose exactly one of --exhaustive, --snakes, --file")
    try:
        if exhaustive_n is not None:
            catalog = cat.exhaustive_catalog(exhaustive_n)
        elif snakes:
            n, k = snakes
            from .lattice_paths import enumerate_snake_paths

            entries = [
                cat.CatalogEntry(
                    f"snake-n{n}-k{k}-{lo.word}-{up.word}",
                    lattice_path_matroid(lo, up),
                    "lattice-path",
                )
                for lo, up in enumerate_snake_paths(n, k)
            ]
            catalog = cat.Catalog.from_entries(entries)
        else:
            catalog = cat.catalog_from_files(files, validate=not skip_validation)
    except (ValueError, InvalidBasesError) as exc:
        raise click.ClickException(str(exc)) from exc

    if workers is None:
        workers = os.cpu_count() or 1
    report = cat.run_verification(catalog, workers=workers)

    for record in report.records:
        status = "PASS" if record.passed else "FAIL"
        click.echo(
            f"{status} {record.identifier} beta={record.beta} "
            f"lhs={record.lhs.numerator}/{record.lhs.denominator} "
            f"rhs={record.rhs.numerator}/{record.rhs.denominator}"
        )
    for rejection in report.rejections:
        click.echo(f"SKIP {rejection.identifier} ({'; '.join(rejection.reasons)})")
    failed = sum(1 for r in report.records if not r.passed)
    click.echo(
        f"verified {len(report.records)} matroids, {failed} failures, "
        f"{len(report.rejections)} rejections"
    )

    if csv_path:
        with open(csv_path, "w", encoding="ascii", newline="") as fh:
            fh.write(cat.report_to_csv(report))
    if json_path:
        with open(json_path, "w", encoding="ascii", newline="") as fh:
            fh.write(cat.report_to_json(report))
    if failed:
        sys.exit(1)


@main.command()
@click.option("--family", required=True,
              type=click.Choice(["uniform", "lattice-path", "graphic", "sums"]))
@click.option("--max-n", type=int, default=6, show_default=True,
              help="Size bound (total size for sums).")
@click.option("--out-dir", required=True, type=click.Path(file_okay=False))
def catalog(family, max_n, out_dir):
    """Write a family of matroid files (one per entry) into OUT-DIR."""
    try:
        if family == "uniform":
            chosen = cat.uniform_catalog(max_n)
        elif family == "lattice-path":
            chosen = cat.lattice_path_catalog(max_n)
        elif family == "graphic":
            chosen = cat.graphic_catalog()
        else:
            chosen = cat.direct_sum_catalog(max_total_n=max_n)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    os.makedirs(out_dir, exist_ok=True)
    for entry in chosen:
        path = os.path.join(out_dir, f"{entry.identifier}.matroid")
        with open(path, "w", encoding="ascii") as fh:
            fh.write(format_matroid(entry.matroid))
    click.echo(f"wrote {len(chosen)} matroid files to {out_dir}")
