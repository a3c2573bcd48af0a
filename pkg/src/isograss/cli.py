"""IsoGrass CLI - cohomology of isotropic Grassmannians and degree obstructions."""

import typer
from typing import Optional

from pydantic import ValidationError

from isograss import __version__
from isograss.commands.enumerate import enumerate_pairs
from isograss.commands.eval import evaluate_expression
from isograss.commands.height import height
from isograss.commands.poincare import poincare
from isograss.commands.ring import ring
from isograss.commands.space import space
from isograss.commands.verdict import verdict
from isograss.commands.verify import verify
from isograss.utils.config import (
    BOUND_ENVVAR,
    DEFAULT_RING_BOUND,
    DEFAULT_S_MAX,
    DEFAULT_SCAN_BOUND,
    CliConfig,
    ExitCode,
    OutputMode,
)
from isograss.utils.console import print_error
from isograss.utils.logs import configure_logging

app = typer.Typer(
    name="isograss",
    help="Rational cohomology of oriented isotropic Grassmannians and degree obstructions",
    add_completion=False,
)


# Register commands
app.command(name="space", help="Show dimension and low-degree facts of a space")(space)
app.command(name="ring", help="Show the cohomology ring presentation")(ring)
app.command(name="poincare", help="Show the Poincaré polynomial")(poincare)
app.command(name="height", help="Compute the height of a ring element")(height)
app.command(name="eval", help="Evaluate an expression in the cohomology ring")(evaluate_expression)
app.command(name="verdict", help="Decide whether maps between two spaces have degree zero")(verdict)
app.command(name="enumerate", help="List equal-dimensional pairs and their verdicts")(
    enumerate_pairs
)
app.command(name="verify", help="Run every scan and cross-check")(verify)


@app.callback()
def main(
    ctx: typer.Context,
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        "-v",
        help="Show version and exit",
        is_eager=True,
    ),
    json_output: bool = typer.Option(False, "--json", help="Write JSON to standard output"),
    bound: int = typer.Option(
        DEFAULT_SCAN_BOUND, "--bound", envvar=BOUND_ENVVAR, help="Largest n (or m) to scan"
    ),
    s_max: int = typer.Option(DEFAULT_S_MAX, "--s-max", help="Largest case parameter s"),
    ring_bound: int = typer.Option(
        DEFAULT_RING_BOUND, "--ring-bound", help="Largest n for the brute-force ring checks"
    ),
    verbose: bool = typer.Option(False, "--verbose", help="Log debug records to standard error"),
):
    """
    IsoGrass - cohomology rings and degree obstructions

    Spaces are written I:2n,k (oriented isotropic k-planes in R^2n),
    RG:m,l (oriented l-planes in R^m), CG:n,k (complex k-planes in C^n)
    and S:d (the d-sphere).

    Common workflows:

      1. Look at a space:
         $ isograss space I:8,2

      2. Show its cohomology ring and the sieve:
         $ isograss ring I:10,3 --trace

      3. Decide a degree question:
         $ isograss verdict I:10,3 I:10,4

      4. Re-check the theorems:
         $ isograss verify --bound 12

    For more information on a specific command:
      $ isograss <command> --help
    """
    if version:
        typer.echo(f"isograss version {__version__}")
        raise typer.Exit()

    configure_logging(verbose)
    try:
        ctx.obj = CliConfig(
            output_mode=OutputMode.JSON if json_output else OutputMode.TEXT,
            scan_bound=bound,
            s_max=s_max,
            ring_bound=ring_bound,
            verbose=verbose,
        )
    except ValidationError as exc:
        print_error(f"Invalid configuration: {exc.errors()[0]['msg']}")
        raise typer.Exit(ExitCode.USAGE)


if __name__ == "__main__":
    app()
