"""Space identifiers and the ``I:2n,k`` / ``RG:m,l`` / ``CG:n,k`` / ``S:d`` mini-syntax."""

from __future__ import annotations

import re
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError, model_validator

from isograss.core.errors import ParameterError

SPACE_PATTERN = re.compile(r"^(I|RG|CG|S):(\d+)(?:,(\d+))?$")


class _Space(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    def __str__(self) -> str:
        return self.label


class IsotropicOriented(_Space):
    """Oriented k-dimensional isotropic subspaces of R^{2n}."""

    kind: Literal["isotropic"] = "isotropic"
    n: int = Field(ge=1)
    k: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_range(self):
        if self.k > self.n:
            raise ValueError(f"isotropic subspaces of R^{2 * self.n} have dimension <= {self.n}")
        return self

    @property
    def label(self) -> str:
        return f"I:{2 * self.n},{self.k}"

    @property
    def params(self) -> tuple[int, int]:
        return (self.n, self.k)


class RealOriented(_Space):
    """Oriented l-planes in R^m."""

    kind: Literal["real"] = "real"
    m: int = Field(ge=2)
    l: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_range(self):
        if self.l > self.m - 1:
            raise ValueError(f"plane dimension must be at most {self.m - 1}")
        return self

    @property
    def label(self) -> str:
        return f"RG:{self.m},{self.l}"

    @property
    def params(self) -> tuple[int, int]:
        return (self.m, self.l)


class ComplexGrass(_Space):
    """Complex k-planes in C^n."""

    kind: Literal["complex"] = "complex"
    n: int = Field(ge=1)
    k: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_range(self):
        if self.k > self.n:
            raise ValueError(f"plane dimension must be at most {self.n}")
        return self

    @property
    def label(self) -> str:
        return f"CG:{self.n},{self.k}"

    @property
    def params(self) -> tuple[int, int]:
        return (self.n, self.k)


class Sphere(_Space):
    kind: Literal["sphere"] = "sphere"
    d: int = Field(ge=1)

    @property
    def label(self) -> str:
        return f"S:{self.d}"

    @property
    def params(self) -> tuple[int]:
        return (self.d,)


SpaceId = Annotated[
    Union[IsotropicOriented, RealOriented, ComplexGrass, Sphere],
    Field(discriminator="kind"),
]
space_adapter: TypeAdapter = TypeAdapter(SpaceId)

_KIND_ORDER = {"isotropic": 0, "real": 1, "complex": 2, "sphere": 3}


def sort_key(space: SpaceId) -> tuple:
    return (_KIND_ORDER[space.kind], *space.params)


def dimension(space: SpaceId) -> int:
    """
    Real dimension of the manifold.

    Args:
        space: Any supported space

    Returns:
        2k(n-k) + k(k+1)/2 for isotropic spaces, l(m-l) for oriented real ones,
        2k(n-k) for complex ones and d for spheres
    """
    if isinstance(space, IsotropicOriented):
        n, k = space.n, space.k
        return 2 * k * (n - k) + k * (k + 1) // 2
    if isinstance(space, RealOriented):
        return space.l * (space.m - space.l)
    if isinstance(space, ComplexGrass):
        return 2 * space.k * (space.n - space.k)
    return space.d


def sphere_equivalent(space: SpaceId) -> Sphere | None:
    """The sphere a space is diffeomorphic to, if it is one of the known cases."""
    if isinstance(space, Sphere):
        return space
    if isinstance(space, IsotropicOriented) and space.k == 1:
        return Sphere(d=2 * space.n - 1)
    if isinstance(space, RealOriented) and space.l in (1, space.m - 1):
        return Sphere(d=space.m - 1)
    if isinstance(space, ComplexGrass) and space.n == 2 and space.k == 1:
        return Sphere(d=2)
    return None


def normalize(space: SpaceId) -> SpaceId:
    """Replace sphere-equivalent spaces by the sphere itself."""
    return sphere_equivalent(space) or space


def parse_space(text: str) -> SpaceId:
    """
    Parse ``I:2n,k``, ``RG:m,l``, ``CG:n,k`` or ``S:d``.

    The isotropic form takes the ambient dimension 2n, which must be even.

    Args:
        text: Space label, surrounding whitespace allowed

    Returns:
        The validated space identifier

    Raises:
        ParameterError: If the label is malformed or its parameters are out of range
    """
    match = SPACE_PATTERN.match(text.strip())
    if not match:
        raise ParameterError(f"malformed space {text!r}; expected I:2n,k | RG:m,l | CG:n,k | S:d")
    tag, first, second = match.group(1), int(match.group(2)), match.group(3)
    if (tag == "S") != (second is None):
        raise ParameterError(f"malformed space {text!r}: wrong number of parameters for {tag}")
    try:
        if tag == "I":
            if first % 2:
                raise ParameterError(f"isotropic ambient dimension must be even, got {first}")
            return IsotropicOriented(n=first // 2, k=int(second))
        if tag == "RG":
            return RealOriented(m=first, l=int(second))
        if tag == "CG":
            return ComplexGrass(n=first, k=int(second))
        return Sphere(d=first)
    except ValidationError as exc:
        reason = exc.errors()[0].get("msg", str(exc))
        raise ParameterError(f"invalid space {text!r}: {reason}") from exc
