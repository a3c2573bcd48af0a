"""Decide whether maps between two spaces must have degree zero."""

import typer

from isograss.core.errors import DimensionMismatchError, IsoGrassError
from isograss.core.obstruction import verdict as decide_verdict
from isograss.core.reports import VerdictDocument, VerdictTag
from isograss.core.spaces import dimension
from isograss.utils.config import ExitCode, fail, resolve_config, space_argument
from isograss.utils.console import console, create_table, print_error, print_header, print_json


app = typer.Typer()


def _value(value) -> str:
    return "-" if value is None else str(value)


@app.command()
def verdict(
    ctx: typer.Context,
    source: str = typer.Argument(..., help="Source space, e.g. I:10,3"),
    target: str = typer.Argument(..., help="Target space, e.g. I:10,4"),
    json_output: bool = typer.Option(False, "--json", help="Write JSON to standard output"),
):
    """
    Run the degree criteria for maps from SOURCE to TARGET.

    Prints the verdict and every criterion that was evaluated.
    """
    # Resolve configuration and parse both spaces
    config = resolve_config(ctx, json_output=json_output)
    source_id, target_id = space_argument(source), space_argument(target)

    # Run the criteria
    try:
        result = decide_verdict(source_id, target_id)
    except DimensionMismatchError as exc:
        print_error(
            f"{source_id.label} has dimension {exc.source_dim}, "
            f"{target_id.label} has dimension {exc.target_dim}"
        )
        raise typer.Exit(ExitCode.DIMENSION_MISMATCH)
    except IsoGrassError as exc:
        fail(exc)

    # Build the document
    document = VerdictDocument(
        source=source_id.label,
        target=target_id.label,
        dimension=dimension(source_id),
        verdict=result,
    )
    if config.json:
        print_json(document)
        return

    print_header("IsoGrass - Degree Verdict")
    console.print(
        f"\n{document.source} -> {document.target} (dimension {document.dimension})\n"
    )

    # Create table of criteria
    table = create_table("Criteria", ["Criterion", "Source", "Target", "Fired", "Detail"])
    for record in result.trace:
        fired = "[red]yes[/red]" if record.fired else "no"
        table.add_row(
            record.name,
            _value(record.source_value),
            _value(record.target_value),
            fired,
            record.detail,
        )
    console.print(table)

    # Display verdict
    color = {
        VerdictTag.FORCED_ZERO: "red",
        VerdictTag.ANY_DEGREE_POSSIBLE: "green",
        VerdictTag.NO_OBSTRUCTION_DETECTED: "yellow",
    }[result.tag]
    console.print(f"\nVerdict: [bold {color}]{result.describe()}[/bold {color}]")
