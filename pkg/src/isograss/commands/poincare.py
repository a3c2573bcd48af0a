"""Poincaré polynomial of a space."""

import typer

from isograss.core.errors import UnsupportedSpaceError
from isograss.core.obstruction import betti_series
from isograss.core.reports import PoincareDocument
from isograss.core.spaces import dimension, normalize
from isograss.utils.config import fail, resolve_config, space_argument
from isograss.utils.console import console, print_error, print_header, print_json, print_summary


app = typer.Typer()


@app.command()
def poincare(
    ctx: typer.Context,
    label: str = typer.Argument(..., help="Space such as I:8,2 or CG:4,2"),
    json_output: bool = typer.Option(False, "--json", help="Write JSON to standard output"),
):
    """
    Print the Poincaré polynomial, its top degree and whether it is palindromic.
    """
    # Resolve configuration and parse the space
    config = resolve_config(ctx, json_output=json_output)
    space_id = space_argument(label)
    # Closed-form series, if any
    series = betti_series(normalize(space_id))
    if series is None:
        fail(UnsupportedSpaceError(f"{space_id.label}: no Poincaré polynomial available"))

    dim = dimension(space_id)
    document = PoincareDocument(
        space=space_id.label,
        dimension=dim,
        poincare=str(series),
        coefficients=list(series.coefficients),
        top_degree=series.top_degree,
        palindromic=series.is_palindromic(dim),
        total_rank=series.total_rank,
        euler=series.euler,
    )
    # Output JSON if requested
    if config.json:
        print_json(document)
        return

    print_header("IsoGrass - Poincaré Polynomial")
    console.print()
    # Display summary
    print_summary({
        "Space": document.space,
        "Poincaré polynomial": document.poincare,
        "Top degree": str(document.top_degree),
        "Palindromic": "yes" if document.palindromic else "no",
        "Total rank": str(document.total_rank),
        "Euler characteristic": str(document.euler),
    })
    # Top degree must match the dimension
    if document.top_degree != dim:
        print_error(f"Top degree {document.top_degree} differs from the dimension {dim}")
        raise typer.Exit(1)
