"""Enumerate equal-dimensional pairs and their verdicts."""

from typing import Optional

import typer

from isograss.core.errors import IsoGrassError
from isograss.core.obstruction import Family, enumerate_equal_dim_pairs
from isograss.core.reports import VerdictTag
from isograss.utils.config import fail, resolve_config
from isograss.utils.console import (
    console,
    create_progress,
    create_table,
    print_header,
    print_info,
    print_json,
    print_summary,
)


app = typer.Typer()


@app.command()
def enumerate_pairs(
    ctx: typer.Context,
    family: Family = typer.Option(Family.ISO_ISO, "--family", "-f", help="Which pairs to scan"),
    bound: Optional[int] = typer.Option(None, "--bound", "-b", help="Largest n (or m) to scan"),
    json_output: bool = typer.Option(False, "--json", help="Write JSON to standard output"),
):
    """
    List every ordered pair of distinct equal-dimensional spaces with its verdict.

    Isotropic spaces run over 2 <= k <= n <= bound, oriented real
    Grassmannians over 2 <= l <= m-2 with m <= bound.
    """
    # Resolve configuration
    config = resolve_config(ctx, json_output=json_output, bound=bound)

    # Scan every pair
    try:
        with create_progress() as progress:
            description = f"Scanning {family.value} pairs up to {config.scan_bound}..."
            progress.add_task(description, total=None)
            report = enumerate_equal_dim_pairs(family, config.scan_bound)
    except IsoGrassError as exc:
        fail(exc)

    # Output JSON if requested
    if config.json:
        print_json(report)
        return

    print_header("IsoGrass - Equal-Dimension Pairs")
    if not report.pairs:
        print_info(f"No {family.value} pairs up to {config.scan_bound}")
        return

    # Create table
    table = create_table(
        f"{family.value} up to {config.scan_bound}",
        ["Source", "Target", "Dim", "Verdict", "Reason"],
    )
    colors = {
        VerdictTag.FORCED_ZERO: "red",
        VerdictTag.ANY_DEGREE_POSSIBLE: "green",
        VerdictTag.NO_OBSTRUCTION_DETECTED: "yellow",
    }
    for pair in report.pairs:
        color = colors[pair.verdict]
        table.add_row(
            pair.source,
            pair.target,
            str(pair.dim),
            f"[{color}]{pair.verdict.value}[/{color}]",
            pair.reason.value,
        )
    console.print(table)
    console.print()
    # Display counts by tag and reason
    print_summary({key: str(count) for key, count in report.summary.items()})
