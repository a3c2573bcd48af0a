"""CLI configuration, exit codes and argument helpers."""

from enum import Enum, IntEnum
from typing import Optional

import typer
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from isograss.core.crossval import DEFAULT_RING_BOUND
from isograss.core.errors import (
    DimensionMismatchError,
    ExprSyntaxError,
    IsoGrassError,
    ParameterError,
    UnknownGeneratorError,
    UnsupportedSpaceError,
)
from isograss.core.spaces import SpaceId, parse_space
from isograss.utils.console import print_error

DEFAULT_SCAN_BOUND = 40
DEFAULT_S_MAX = 200
BOUND_ENVVAR = "ISOGRASS_BOUND"


class ExitCode(IntEnum):
    OK = 0
    VERIFICATION_FAILED = 1
    USAGE = 2
    UNSUPPORTED = 3
    DIMENSION_MISMATCH = 4


class OutputMode(str, Enum):
    TEXT = "text"
    JSON = "json"


class CliConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    output_mode: OutputMode = OutputMode.TEXT
    scan_bound: int = Field(default=DEFAULT_SCAN_BOUND, gt=0)
    s_max: int = Field(default=DEFAULT_S_MAX, gt=0)
    ring_bound: int = Field(default=DEFAULT_RING_BOUND, gt=0)
    height_cap_override: Optional[int] = Field(default=None, gt=0)
    verbose: bool = False

    @property
    def json(self) -> bool:
        return self.output_mode is OutputMode.JSON


def get_config(ctx: typer.Context) -> CliConfig:
    """
    The configuration stored by the app callback, or the defaults.

    Args:
        ctx: Any context of the running command; the root context holds the config

    Returns:
        The global CLI configuration
    """
    root = ctx.find_root() if ctx is not None else None
    config = getattr(root, "obj", None) if root is not None else None
    return config if isinstance(config, CliConfig) else CliConfig()


def resolve_config(
    ctx: typer.Context,
    json_output: bool = False,
    bound: Optional[int] = None,
    s_max: Optional[int] = None,
    ring_bound: Optional[int] = None,
    height_cap: Optional[int] = None,
) -> CliConfig:
    """Merge command-level flags over the global configuration; local flags win."""
    base = get_config(ctx)
    updates = {}
    if json_output:
        updates["output_mode"] = OutputMode.JSON
    if bound is not None:
        updates["scan_bound"] = bound
    if s_max is not None:
        updates["s_max"] = s_max
    if ring_bound is not None:
        updates["ring_bound"] = ring_bound
    if height_cap is not None:
        updates["height_cap_override"] = height_cap
    try:
        return CliConfig.model_validate({**base.model_dump(), **updates})
    except ValidationError as exc:
        print_error(f"Invalid configuration: {exc.errors()[0]['msg']}")
        raise typer.Exit(ExitCode.USAGE)


def space_argument(text: str) -> SpaceId:
    """Parse a space label or leave with the usage exit code."""
    try:
        return parse_space(text)
    except ParameterError as exc:
        print_error(str(exc))
        raise typer.Exit(ExitCode.USAGE)


def exit_code_for(exc: IsoGrassError) -> ExitCode:
    if isinstance(exc, UnsupportedSpaceError):
        return ExitCode.UNSUPPORTED
    if isinstance(exc, DimensionMismatchError):
        return ExitCode.DIMENSION_MISMATCH
    if isinstance(exc, (ParameterError, ExprSyntaxError, UnknownGeneratorError)):
        return ExitCode.USAGE
    return ExitCode.VERIFICATION_FAILED


def fail(exc: IsoGrassError):
    """Report a core error and leave with its exit code."""
    print_error(str(exc))
    raise typer.Exit(exit_code_for(exc))
