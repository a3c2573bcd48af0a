"""Run every scan and cross-check and report the result."""

from typing import Optional

import typer

from isograss.core.crossval import run_verification
from isograss.core.errors import IsoGrassError
from isograss.core.reports import VerifyReport
from isograss.utils.config import ExitCode, fail, resolve_config
from isograss.utils.console import (
    console,
    create_progress,
    create_table,
    print_error,
    print_header,
    print_json,
    print_success,
    print_warning,
)


app = typer.Typer()


def _mark(passed: bool) -> str:
    return "[green]pass[/green]" if passed else "[red]FAIL[/red]"


def _print_report(report: VerifyReport):
    table = create_table("Checks", ["Check", "Scope", "Result"])
    for enumeration in report.enumerations:
        undecided = len(enumeration.undecided())
        table.add_row(
            f"enumerate {enumeration.family}",
            f"{len(enumeration.pairs)} pairs, {undecided} undecided",
            _mark(undecided == 0),
        )
    theorem41 = report.theorem41
    table.add_row(
        "equal heights",
        f"{theorem41.pairs_scanned} pairs, {len(theorem41.counterexamples)} with equal height",
        _mark(theorem41.passed),
    )
    for case in report.case_families:
        table.add_row(
            f"case l = {case.l}",
            f"s <= {case.s_max}, first values {case.first_values[0]} vs {case.first_values[1]}",
            _mark(case.passed),
        )
    table.add_row(
        "iso-real bound",
        f"minimum {report.theorem42.minimum} at (n, k) = {report.theorem42.argmin}",
        _mark(report.theorem42.passed),
    )
    parity = report.parity
    table.add_row("dimension parity", f"{parity.checked} spaces", _mark(parity.passed))
    for check in report.cross_checks:
        table.add_row(check.name, f"{check.checked} cases", _mark(check.passed))
    console.print(table)

    for check in report.cross_checks:
        for note in check.notes:
            print_warning(f"{check.name}: {note}")


@app.command()
def verify(
    ctx: typer.Context,
    bound: Optional[int] = typer.Option(None, "--bound", "-b", help="Largest n (or m) to scan"),
    s_max: Optional[int] = typer.Option(None, "--s-max", help="Largest case parameter s"),
    ring_bound: Optional[int] = typer.Option(
        None, "--ring-bound", help="Largest n for the brute-force ring checks"
    ),
    json_output: bool = typer.Option(False, "--json", help="Write JSON to standard output"),
):
    """
    Check the degree theorems and every cross-check up to the given bounds.

    Exits with 1 and lists the offending pairs when anything fails.
    """
    # Resolve configuration
    config = resolve_config(
        ctx, json_output=json_output, bound=bound, s_max=s_max, ring_bound=ring_bound
    )

    # Run every stage with a progress spinner
    try:
        with create_progress() as progress:
            task = progress.add_task("Starting...", total=None)
            report = run_verification(
                config.scan_bound,
                config.s_max,
                config.ring_bound,
                on_stage=lambda description: progress.update(task, description=f"{description}..."),
            )
    except IsoGrassError as exc:
        fail(exc)

    # Output JSON or display the table of checks
    if config.json:
        print_json(report)
    else:
        print_header("IsoGrass - Verify")
        _print_report(report)
        console.print()

    if report.passed:
        if not config.json:
            print_success(f"All checks passed up to bound {report.bound}")
        return

    # List failures and exit with 1
    for failure in report.failures:
        print_error(failure)
    raise typer.Exit(ExitCode.VERIFICATION_FAILED)
