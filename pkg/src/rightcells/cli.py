"""
Command-line front end: insertion, reading words, smoothness queries,
Knuth classes, the cell census with JSON/CSV reports, and the named
verification checks.

Exit codes: 0 on success or PASS, 1 when a verify check reports FAIL,
2 on usage errors.
"""
from __future__ import annotations

import csv
import dataclasses
import io
import json
import time
from pathlib import Path

import click

from . import __version__
from .cells import (
    ALL_NONSMOOTH,
    ALL_SMOOTH,
    DEFAULT_MAX_N,
    MIXED,
    CellReport,
    SurveyResult,
    classify_cell,
    survey,
)
from .checks import (
    VerificationOutcome,
    check_hohlweg,
    check_inverse_smooth,
    check_knuth_vs_rsk,
    check_oracle_equivalence,
    check_section5,
    check_section6,
    check_theorem_main,
)
from .knuth import knuth_class, knuth_neighbors
from .perms import perm_from_text, perm_to_text
from .smoothness import is_smooth, is_smooth_oracle, smoothness_witness
from .tableaux import (
    column_word,
    row_word,
    rs_insert,
    shape_of,
    tableau_from_text,
    tableau_to_text,
)

VERIFY_CHECKS = (
    "theorem-main",
    "hohlweg",
    "inverse-smooth",
    "knuth-vs-rsk",
    "oracle-equivalence",
    "section5",
    "section6",
)


def parse_perm_arg(text: str) -> tuple[int, ...]:
    """Parse and validate a permutation argument; usage error on failure."""
    try:
        return perm_from_text(text)
    except ValueError as exc:
        raise click.UsageError(f"invalid permutation {text!r}: {exc}") from None


def parse_tableau_arg(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse and validate a tableau argument; usage error on failure."""
    try:
        return tableau_from_text(text)
    except ValueError as exc:
        raise click.UsageError(f"invalid tableau {text!r}: {exc}") from None


def survey_to_json(result: SurveyResult) -> str:
    payload = {
        "n": result.n,
        "cells": [
            {
                "tableau": [list(row) for row in c.tableau],
                "shape": list(c.shape),
                "size": c.size,
                "smooth_count": c.smooth_count,
                "nonsmooth_count": c.nonsmooth_count,
                "classification": c.classification,
                "sample_smooth": list(c.sample_smooth)
                if c.sample_smooth is not None
                else None,
                "sample_nonsmooth": list(c.sample_nonsmooth)
                if c.sample_nonsmooth is not None
                else None,
            }
            for c in result.cells
        ],
        "totals": {k: result.totals[k] for k in (ALL_SMOOTH, ALL_NONSMOOTH, MIXED)},
    }
    return json.dumps(payload, indent=2) + "\n"


def survey_from_json(text: str) -> SurveyResult:
    payload = json.loads(text)
    cells = []
    for c in payload["cells"]:
        cells.append(
            CellReport(
                tableau=tuple(tuple(row) for row in c["tableau"]),
                shape=tuple(c["shape"]),
                size=c["size"],
                smooth_count=c["smooth_count"],
                nonsmooth_count=c["nonsmooth_count"],
                classification=c["classification"],
                sample_smooth=tuple(c["sample_smooth"])
                if c["sample_smooth"] is not None
                else None,
                sample_nonsmooth=tuple(c["sample_nonsmooth"])
                if c["sample_nonsmooth"] is not None
                else None,
            )
        )
    totals = {k: payload["totals"][k] for k in (ALL_SMOOTH, ALL_NONSMOOTH, MIXED)}
    return SurveyResult(n=payload["n"], cells=tuple(cells), totals=totals)


def survey_to_csv(result: SurveyResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["tableau", "shape", "size", "smooth_count", "nonsmooth_count", "classification"]
    )
    for c in result.cells:
        writer.writerow(
            [
                tableau_to_text(c.tableau),
                ",".join(map(str, c.shape)),
                c.size,
                c.smooth_count,
                c.nonsmooth_count,
                c.classification,
            ]
        )
    return buf.getvalue()


def _cache_path(cache_dir: str, n: int) -> Path:
    return Path(cache_dir) / f"survey_n{n}.json"


def _load_cached_survey(cache_dir: str, n: int) -> SurveyResult | None:
    path = _cache_path(cache_dir, n)
    if not path.is_file():
        return None
    try:
        result = survey_from_json(path.read_text())
    except (ValueError, KeyError, TypeError):
        return None
    return result if result.n == n else None


def _store_survey(cache_dir: str, result: SurveyResult) -> None:
    path = _cache_path(cache_dir, result.n)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(survey_to_json(result))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=__version__, prog_name="rightcells")
def main():
    """Cells of the symmetric group and their Schubert-smoothness census."""


@main.command("rsk")
@click.argument("perm")
def rsk_cmd(perm):
    """Insertion tableau and shape of PERM.

    PERM is comma-separated 1-based values, like 2,4,1,3,5.
    """
    tab = rs_insert(parse_perm_arg(perm))
    click.echo(tableau_to_text(tab))
    click.echo(",".join(map(str, shape_of(tab))))


@main.command("word")
@click.option("--row", "kind", flag_value="row", default=True, help="Row reading word (default).")
@click.option("--column", "kind", flag_value="column", help="Column reading word.")
@click.argument("tableau")
def word_cmd(kind, tableau):
    """Reading word of TABLEAU.

    TABLEAU joins rows with '|', like 1,3,5|2,4.
    """
    tab = parse_tableau_arg(tableau)
    reading = row_word(tab) if kind == "row" else column_word(tab)
    click.echo(perm_to_text(reading))


@main.command("smooth")
@click.argument("perm")
@click.option("--witness", is_flag=True, help="Print a pattern occurrence when non-smooth.")
@click.option("--oracle", is_flag=True, help="Use the exhaustive-scan oracle.")
def smooth_cmd(perm, witness, oracle):
    """Whether PERM avoids both 3412 and 4231."""
    w = parse_perm_arg(perm)
    value = is_smooth_oracle(w) if oracle else is_smooth(w)
    click.echo("true" if value else "false")
    if witness and not value:
        occ = smoothness_witness(w)
        name = "".join(map(str, occ.pattern))
        click.echo(f"pattern {name} at positions {','.join(map(str, occ.positions))}")


@main.group("knuth")
def knuth_group():
    """Knuth moves and Knuth classes."""


@knuth_group.command("class")
@click.argument("perm")
def knuth_class_cmd(perm):
    """All members of the Knuth class of PERM, sorted."""
    for v in sorted(knuth_class(parse_perm_arg(perm))):
        click.echo(perm_to_text(v))


@knuth_group.command("neighbors")
@click.argument("perm")
def knuth_neighbors_cmd(perm):
    """Permutations one Knuth move from PERM, sorted."""
    for v in sorted(knuth_neighbors(parse_perm_arg(perm))):
        click.echo(perm_to_text(v))


@main.group("cell")
def cell_group():
    """Single-cell queries."""


@cell_group.command("classify")
@click.option("--tableau", "tableau_text", default=None, help="Cell given by its tableau.")
@click.option("--perm", "perm_text", default=None, help="Cell given by any member.")
def cell_classify_cmd(tableau_text, perm_text):
    """Classify one cell by the smoothness of its members."""
    if (tableau_text is None) == (perm_text is None):
        raise click.UsageError("provide exactly one of --tableau or --perm")
    if tableau_text is not None:
        tab = parse_tableau_arg(tableau_text)
    else:
        tab = rs_insert(parse_perm_arg(perm_text))
    report = classify_cell(tab)
    click.echo(f"tableau: {tableau_to_text(report.tableau)}")
    click.echo(f"shape: {','.join(map(str, report.shape))}")
    click.echo(f"size: {report.size}")
    click.echo(f"smooth_count: {report.smooth_count}")
    click.echo(f"nonsmooth_count: {report.nonsmooth_count}")
    click.echo(f"classification: {report.classification}")
    if report.sample_smooth is not None:
        click.echo(f"sample_smooth: {perm_to_text(report.sample_smooth)}")
    if report.sample_nonsmooth is not None:
        click.echo(f"sample_nonsmooth: {perm_to_text(report.sample_nonsmooth)}")


@main.command("survey")
@click.argument("n", type=int)
@click.option("--jobs", "-j", type=int, default=1, show_default=True, help="Worker lanes over disjoint rank ranges.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the report to FILE instead of stdout.")
@click.option("--cache-dir", type=click.Path(file_okay=False), default="cache", show_default=True)
@click.option("--max-n", type=int, default=DEFAULT_MAX_N, show_default=True, help="Upper bound on N.")
def survey_cmd(n, jobs, fmt, out, cache_dir, max_n):
    """Census of all cells of S_N."""
    if max_n > DEFAULT_MAX_N:
        click.echo(
            f"warning: --max-n {max_n} allows surveys beyond n={DEFAULT_MAX_N}; "
            "runtime and memory grow factorially (n! permutations)",
            err=True,
        )
    if not 1 <= n <= max_n:
        raise click.UsageError(f"n={n} outside the allowed range 1..{max_n}")
    result = survey(n, jobs=jobs, max_n=max_n)
    _store_survey(cache_dir, result)
    text = survey_to_json(result) if fmt == "json" else survey_to_csv(result)
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _format_params(outcome: VerificationOutcome) -> str:
    parts = []
    for key, value in outcome.params.items():
        if isinstance(value, tuple):
            value = ",".join(map(str, value))
        parts.append(f"{key}={value}")
    return " ".join(parts)


@main.command("verify")
@click.argument("check", type=click.Choice(VERIFY_CHECKS))
@click.argument("n", type=int)
@click.option("--corrected", is_flag=True, help="theorem-main: use the repaired all-smooth predicate.")
@click.option("--k", "ks", multiple=True, type=int, help="section5: family parameters (default: 3 4).")
@click.option("--samples", type=int, default=10000, show_default=True, help="oracle-equivalence: number of random samples.")
@click.option("--sample-n", type=int, default=12, show_default=True, help="oracle-equivalence: size of sampled permutations.")
@click.option("--seed", type=int, default=1729, show_default=True, help="oracle-equivalence: RNG seed.")
@click.option("--jobs", "-j", type=int, default=1, show_default=True, help="Worker lanes for census-backed checks.")
@click.option("--cache-dir", type=click.Path(file_okay=False), default="cache", show_default=True)
@click.pass_context
def verify_cmd(ctx, check, n, corrected, ks, samples, sample_n, seed, jobs, cache_dir):
    """Run one named check against brute force; exit 1 on FAIL."""
    if n < 1:
        raise click.UsageError(f"n must be >= 1, got {n}")
    if check == "theorem-main":
        start = time.perf_counter()
        cached = _load_cached_survey(cache_dir, n)
        computed = cached is None
        if computed:
            cached = survey(n, jobs=jobs)
            _store_survey(cache_dir, cached)
        outcome = check_theorem_main(n, result=cached, corrected=corrected)
        if computed:
            # charge the census to the check it was computed for
            outcome = dataclasses.replace(
                outcome, elapsed=time.perf_counter() - start
            )
    elif check == "hohlweg":
        outcome = check_hohlweg(n)
    elif check == "inverse-smooth":
        outcome = check_inverse_smooth(n)
    elif check == "knuth-vs-rsk":
        outcome = check_knuth_vs_rsk(n)
    elif check == "oracle-equivalence":
        outcome = check_oracle_equivalence(n, samples=samples, sample_n=sample_n, seed=seed)
    elif check == "section5":
        outcome = check_section5(n, ks=tuple(ks) if ks else (3, 4))
    else:
        outcome = check_section6(n)
    click.echo(
        f"{outcome.check} {_format_params(outcome)}: {outcome.status} "
        f"({outcome.elapsed:.3f}s) {outcome.detail}"
    )
    if not outcome.passed:
        click.echo(f"counterexample: {outcome.counterexample}")
        ctx.exit(1)


def run_command(argv) -> int:
    """Invoke the CLI programmatically and return the process exit code."""
    try:
        rv = main.main(args=list(argv), prog_name="rightcells", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return 130
    return int(rv) if rv else 0


if __name__ == "__main__":
    main()
