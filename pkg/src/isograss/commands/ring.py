"""Show the cohomology ring presentation of a space."""

import typer

from isograss.core.errors import IsoGrassError
from isograss.core.presentations import Presentation, build_presentation, remark_exterior_formula
from isograss.core.reports import (
    GeneratorEntry,
    PresentationDocument,
    SchubertDocument,
    SieveStepEntry,
)
from isograss.core.schubert import betti_and_euler, partitions_in_box, sigma1_height
from isograss.core.spaces import ComplexGrass, dimension, normalize
from isograss.utils.config import fail, resolve_config, space_argument
from isograss.utils.console import (
    console,
    create_table,
    print_header,
    print_json,
    print_presentation_info,
    print_success,
    print_summary,
    print_warning,
)


app = typer.Typer()


def presentation_document(
    presentation: Presentation, include_trace: bool = False
) -> PresentationDocument:
    """Serializable form of a presentation, with the sieve trace on request."""
    series = presentation.poincare_series()
    top = presentation.top_degree()
    fields = dict(
        space=presentation.label,
        dimension=dimension(presentation.space) if presentation.space else top,
        generators=[
            GeneratorEntry(name=name, degree=degree, bundle=presentation.bundles.get(name, ""))
            for name, degree in zip(presentation.alphabet.names, presentation.alphabet.degrees)
        ],
        relations=[str(r) for r in presentation.relations],
        exterior_degrees=list(presentation.exterior_degrees),
        quotient_top_degree=presentation.quotient_top_degree(),
        top_degree=top,
        poincare=str(series),
        palindromic=series.is_palindromic(top),
    )
    trace = presentation.trace
    if include_trace and trace is not None:
        remark = remark_exterior_formula(trace.n, trace.k)
        fields.update(
            sieve=[
                SieveStepEntry(
                    index=step.index,
                    differential=str(step.differential),
                    reduction=str(step.reduction),
                    outcome=step.outcome.value,
                    survivor_degree=step.survivor_degree,
                )
                for step in trace.steps
            ],
            sieve_relations=[str(r) for r in trace.relations],
            remark_exterior=remark,
            remark_agrees=remark == trace.exterior,
        )
    return PresentationDocument(**fields)


def schubert_document(space: ComplexGrass) -> SchubertDocument:
    rows, width = space.k, space.n - space.k
    betti = betti_and_euler(rows, width)
    return SchubertDocument(
        space=space.label,
        dimension=dimension(space),
        rows=rows,
        width=width,
        partitions=[str(p) for p in partitions_in_box(rows, width)],
        poincare=str(betti.series),
        euler=betti.euler,
        sigma1_height=sigma1_height(rows, width),
    )


def _print_trace(document: PresentationDocument):
    table = create_table("Sieve", ["i", "Degree", "d(x)", "Reduced", "Outcome"])
    for step in document.sieve:
        color = "yellow" if step.outcome == "Survivor" else "white"
        table.add_row(
            str(step.index),
            str(2 * step.index - 1),
            step.differential,
            step.reduction,
            f"[{color}]{step.outcome}[/{color}]",
        )
    console.print()
    console.print(table)

    console.print("\n[bold cyan]Relations accepted by the sieve:[/bold cyan]")
    for relation in document.sieve_relations:
        console.print(f"  {relation}")
    console.print()

    degrees = ", ".join(str(d) for d in document.exterior_degrees) or "(none)"
    remark = ", ".join(str(d) for d in document.remark_exterior) or "(none)"
    if document.remark_agrees:
        print_success(f"Progression formula agrees with the sieve: {degrees}")
    else:
        print_warning(f"Progression formula gives {remark}, the sieve gives {degrees}")


@app.command()
def ring(
    ctx: typer.Context,
    label: str = typer.Argument(..., help="Space such as I:10,3 or RG:5,2"),
    trace: bool = typer.Option(False, "--trace", help="Show the survivor sieve step by step"),
    json_output: bool = typer.Option(False, "--json", help="Write JSON to standard output"),
):
    """
    Show generators, relations and exterior degrees of a cohomology ring.

    Isotropic spaces need 2 <= k < n, oriented real Grassmannians an odd
    ambient dimension. Complex Grassmannians are summarized through their
    Schubert basis.
    """
    # Resolve configuration and parse the space
    config = resolve_config(ctx, json_output=json_output)
    space_id = normalize(space_argument(label))

    # Complex Grassmannians are summarized through the Schubert basis
    if isinstance(space_id, ComplexGrass):
        try:
            document = schubert_document(space_id)
        except IsoGrassError as exc:
            fail(exc)
        if config.json:
            print_json(document)
            return
        print_header("IsoGrass - Schubert Basis")
        console.print()
        print_summary({
            "Space": document.space,
            "Dimension": str(document.dimension),
            "Box": f"{document.rows} x {document.width}",
            "Schubert classes": str(len(document.partitions)),
            "Poincaré polynomial": document.poincare,
            "Euler characteristic": str(document.euler),
            "sigma_1 height": str(document.sigma1_height),
        })
        return

    # Build the presentation
    try:
        presentation = build_presentation(space_id)
        document = presentation_document(presentation, include_trace=trace)
    except IsoGrassError as exc:
        fail(exc)

    # Output JSON if requested
    if config.json:
        print_json(document)
        return

    # Display the presentation
    print_header("IsoGrass - Ring Presentation")
    print_presentation_info(
        document.space,
        document.dimension,
        [(g.name, g.degree, g.bundle) for g in document.generators],
        document.relations,
        document.exterior_degrees,
        document.top_degree,
    )
    print_summary({
        "Poincaré polynomial": document.poincare,
        "Palindromic": "yes" if document.palindromic else "no",
    })
    # Show the survivor sieve on request
    if trace:
        if document.sieve is None:
            print_warning(f"{document.space} has no survivor sieve")
        else:
            _print_trace(document)
