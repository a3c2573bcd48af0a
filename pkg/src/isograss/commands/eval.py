"""Evaluate an expression in a cohomology ring."""

import typer

from isograss.core.errors import IsoGrassError
from isograss.core.exprparse import evaluate_text
from isograss.core.presentations import build_presentation
from isograss.core.reports import EvalDocument
from isograss.utils.config import fail, resolve_config, space_argument
from isograss.utils.console import console, print_header, print_json, print_summary


app = typer.Typer()


@app.command()
def evaluate_expression(
    ctx: typer.Context,
    label: str = typer.Argument(..., help="Space such as I:8,2"),
    expression: str = typer.Argument(..., help="Expression such as (c2 + e^2)*p1 - 1/2*e^4"),
    json_output: bool = typer.Option(False, "--json", help="Write JSON to standard output"),
):
    """
    Expand an expression over the generators of a space and reduce it.

    Derived names such as p1 = e^2 for rank-2 bundles are accepted.
    """
    # Resolve configuration and parse the space
    config = resolve_config(ctx, json_output=json_output)
    space_id = space_argument(label)

    # Build the ring, expand the expression and reduce it
    try:
        presentation = build_presentation(space_id)
        value = evaluate_text(expression, presentation.alphabet, presentation.named_classes())
        reduced = presentation.quotient.normal_form(value)
    except IsoGrassError as exc:
        fail(exc)

    document = EvalDocument(
        space=presentation.label,
        expression=expression,
        value=str(value),
        normal_form=str(reduced),
        is_zero=reduced.is_zero,
        degrees=sorted(value.degrees()),
    )
    # Output JSON if requested
    if config.json:
        print_json(document)
        return

    print_header("IsoGrass - Evaluate")
    console.print()
    # Display summary
    print_summary({
        "Space": document.space,
        "Expression": document.expression,
        "Expanded": document.value,
        "Normal form": document.normal_form,
        "Degrees": ", ".join(str(d) for d in document.degrees) or "-",
        "Zero in cohomology": "yes" if document.is_zero else "no",
    })
