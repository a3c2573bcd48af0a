"""Show dimension and low-degree facts for a space."""

import typer

from isograss.core.errors import IsoGrassError, ParameterError
from isograss.core.obstruction import p1_height_formula
from isograss.core.presentations import fact_sheet
from isograss.core.reports import SpaceDocument
from isograss.core.spaces import dimension, normalize
from isograss.utils.config import fail, resolve_config, space_argument
from isograss.utils.console import console, print_header, print_info, print_json, print_summary


app = typer.Typer()


@app.command()
def space(
    ctx: typer.Context,
    label: str = typer.Argument(..., help="Space such as I:8,2, RG:7,3, CG:4,2 or S:5"),
    json_output: bool = typer.Option(False, "--json", help="Write JSON to standard output"),
):
    """
    Show the dimension, fact sheet and sphere equivalence of a space.

    I:2n,k takes the ambient dimension 2n, so I:8,2 has n = 4.
    """
    # Resolve configuration and parse the space
    config = resolve_config(ctx, json_output=json_output)
    space_id = space_argument(label)

    # Look up the fact sheet
    try:
        sheet = fact_sheet(space_id)
        dim = dimension(space_id)
    except IsoGrassError as exc:
        fail(exc)

    # The height formula only covers some families
    normalized = normalize(space_id)
    try:
        height = p1_height_formula(normalized)
    except ParameterError:
        height = None

    document = SpaceDocument(
        space=space_id.label,
        normalized=normalized.label,
        dimension=dim,
        h1_rank=sheet.h1_rank,
        h4_rank=sheet.h4_rank,
        h4_generator=sheet.h4_generator_name,
        orientable=sheet.orientable,
        sphere_equivalent=sheet.sphere_equivalent.label if sheet.sphere_equivalent else None,
        companion_orientable=sheet.companion_orientable,
        p1_height=height,
    )
    # Output JSON if requested
    if config.json:
        print_json(document)
        return

    print_header("IsoGrass - Space")
    console.print()
    # Display summary
    summary = {
        "Space": document.space,
        "Dimension": str(document.dimension),
        "H^1 rank": str(document.h1_rank),
        "H^4 rank": str(document.h4_rank),
        "H^4 generator": document.h4_generator or "-",
        "Orientable": "yes" if document.orientable else "no",
    }
    if document.companion_orientable is not None:
        companion = "yes" if document.companion_orientable else "no"
        summary["Unoriented companion orientable"] = companion
    if document.p1_height is not None:
        summary["p1 height"] = str(document.p1_height)
    print_summary(summary)

    if document.sphere_equivalent:
        console.print()
        print_info(f"{document.space} is diffeomorphic to the sphere {document.sphere_equivalent}")
