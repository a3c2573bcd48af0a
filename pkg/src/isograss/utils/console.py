"""Console output utilities using rich."""

from typing import Optional

from pydantic import BaseModel
from rich.console import Console
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table
from rich.text import Text

console = Console()
err_console = Console(stderr=True)


def print_success(message: str):
    """Print success message in green."""
    console.print(f"[green]✓[/green] {message}")


def print_error(message: str):
    """Print error message in red on standard error."""
    err_console.print(f"[red]✗[/red] {message}", style="red", markup=True, highlight=False)


def print_warning(message: str):
    """Print warning message in yellow."""
    console.print(f"[yellow]⚠[/yellow] {message}", style="yellow")


def print_info(message: str):
    """Print info message in blue."""
    console.print(f"[blue]ℹ[/blue] {message}", style="blue")


def print_header(title: str):
    """Print a header panel."""
    console.print(Panel(f"[bold cyan]{title}[/bold cyan]", expand=False))


def create_table(title: str, columns: list[str]) -> Table:
    """Create a formatted table."""
    table = Table(title=title, show_header=True, header_style="bold magenta")
    for column in columns:
        table.add_column(column)
    return table


def print_key_value(key: str, value: str, key_style: str = "cyan"):
    """Print key-value pair."""
    console.print(f"[{key_style}]{key}:[/{key_style}] {value}")


def create_progress():
    """Create a progress spinner."""
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=err_console,
        transient=True,
    )


def print_json(document: BaseModel):
    """Write a report model as indented JSON, without markup or wrapping."""
    console.out(document.model_dump_json(indent=2), highlight=False)


def print_presentation_info(
    label: str,
    dim: int,
    generators: list[tuple[str, int, str]],
    relations: list[str],
    exterior: list[int],
    top_degree: Optional[int] = None,
):
    """Print a ring presentation in a formatted panel."""
    info_text = Text()
    info_text.append(f"Space:         {label}\n", style="white")
    info_text.append(f"Dimension:     {dim}\n", style="white")
    if top_degree is not None:
        style = "green" if top_degree == dim else "red"
        info_text.append(f"Top degree:    {top_degree}\n", style=style)

    info_text.append("\nGenerators:\n", style="bold cyan")
    if not generators:
        info_text.append("  (none)\n", style="dim")
    for name, degree, bundle in generators:
        info_text.append(f"  {name:<6} degree {degree:<4} {bundle}\n", style="white")

    info_text.append("\nRelations:\n", style="bold cyan")
    if not relations:
        info_text.append("  (none)\n", style="dim")
    for relation in relations:
        info_text.append(f"  {relation}\n", style="green")

    degrees = ", ".join(str(d) for d in exterior) if exterior else "(none)"
    info_text.append(f"\nExterior:      {degrees}\n", style="yellow")

    console.print(Panel(info_text, title="[bold]Presentation[/bold]", border_style="green"))


def print_summary(items: dict[str, str]):
    """Print a summary of key-value pairs."""
    table = Table(show_header=False, box=None, padding=(0, 2))
    table.add_column("Key", style="cyan", no_wrap=True)
    table.add_column("Value", style="white")

    for key, value in items.items():
        table.add_row(key, value)

    console.print(table)
