"""Height of a ring element."""

from typing import Optional

import typer

from isograss.core.errors import HeightOverflow, IsoGrassError, ParameterError
from isograss.core.exprparse import evaluate_text
from isograss.core.obstruction import p1_height_formula
from isograss.core.presentations import build_presentation
from isograss.core.reports import HeightDocument
from isograss.utils.config import ExitCode, fail, resolve_config, space_argument
from isograss.utils.console import (
    console,
    print_error,
    print_header,
    print_json,
    print_success,
    print_summary,
)


app = typer.Typer()


@app.command()
def height(
    ctx: typer.Context,
    label: str = typer.Argument(..., help="Space such as I:8,2"),
    element: str = typer.Option(
        "p1", "--element", "-e", help="Homogeneous element, e.g. p1 or c2+e^2"
    ),
    cap: Optional[int] = typer.Option(None, "--cap", help="Give up once this power is reached"),
    json_output: bool = typer.Option(False, "--json", help="Write JSON to standard output"),
):
    """
    Compute the largest power of an element that is nonzero in cohomology.

    For p1 the closed formula is printed next to the computed value.
    """
    # Resolve configuration and parse the space
    config = resolve_config(ctx, json_output=json_output, height_cap=cap)
    space_id = space_argument(label)

    # Build the ring and raise the element to successive powers
    try:
        presentation = build_presentation(space_id)
        value = evaluate_text(element, presentation.alphabet, presentation.named_classes())
        quotient = presentation.quotient
        result = quotient.height(value, config.height_cap_override)
    except HeightOverflow as exc:
        print_error(f"{element} is still nonzero at power {exc.cap}; raise --cap")
        raise typer.Exit(ExitCode.VERIFICATION_FAILED)
    except IsoGrassError as exc:
        fail(exc)

    # Compare p1 against the closed formula
    formula = None
    if element.strip() == "p1" and presentation.space is not None:
        try:
            formula = p1_height_formula(presentation.space)
        except ParameterError:
            formula = None

    document = HeightDocument(
        space=presentation.label,
        element=element,
        normal_form=str(quotient.normal_form(value)),
        height=result,
        formula=formula,
        agree=None if formula is None else formula == result,
    )
    # Output JSON or display summary
    if config.json:
        print_json(document)
    else:
        print_header("IsoGrass - Height")
        console.print()
        summary = {
            "Space": document.space,
            "Element": document.element,
            "Normal form": document.normal_form,
            "Height": str(document.height),
        }
        if formula is not None:
            summary["Formula"] = str(formula)
        print_summary(summary)
        if document.agree:
            print_success("Computed height agrees with the formula")

    # Disagreement with the formula is a failed check
    if document.agree is False:
        if not config.json:
            print_error(f"Computed height {result} differs from the formula {formula}")
        raise typer.Exit(ExitCode.VERIFICATION_FAILED)
