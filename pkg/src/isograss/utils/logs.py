"""Logging setup for the command-line entry point."""

import logging

from rich.logging import RichHandler

from isograss.utils.console import err_console


def configure_logging(verbose: bool = False):
    """Route library loggers through a rich handler on standard error."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False, rich_tracebacks=True)],
        force=True,
    )
