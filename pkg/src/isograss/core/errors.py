"""Exception hierarchy shared by the core modules and the CLI."""

from typing import Optional, Sequence


class IsoGrassError(Exception):
    """Base class for every error raised by isograss."""


class ParameterError(IsoGrassError, ValueError):
    """Parameters outside the documented range of an operation."""


class IncompatibleRingsError(IsoGrassError):
    """Two polynomials over different generator alphabets were combined."""


class HeightOverflow(IsoGrassError):
    """The height search reached its cap without the element becoming zero."""

    def __init__(self, cap: int):
        super().__init__(f"element is still nonzero at power {cap}")
        self.cap = cap


class TopDegreeMismatch(IsoGrassError):
    """A built presentation does not reach the dimension of its manifold."""

    def __init__(self, label: str, top_degree: int, expected: int):
        super().__init__(f"{label}: top degree {top_degree} != manifold dimension {expected}")
        self.top_degree = top_degree
        self.expected = expected


class QuotientNotFiniteError(IsoGrassError):
    """A quotient ring has nonzero graded pieces beyond the scan limit."""


class NotCompleteIntersectionError(IsoGrassError):
    """The complete-intersection series has a negative coefficient."""


class UnsupportedSpaceError(IsoGrassError):
    """No ring presentation is available for the requested space."""


class DimensionMismatchError(IsoGrassError):
    """Degree questions only make sense for manifolds of equal dimension."""

    def __init__(self, source_dim: int, target_dim: int):
        super().__init__(f"dimensions differ: source {source_dim}, target {target_dim}")
        self.source_dim = source_dim
        self.target_dim = target_dim


class ExprSyntaxError(IsoGrassError):
    """Base class for expression errors that carry an input position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownCharacter(ExprSyntaxError):
    def __init__(self, char: str, position: int):
        super().__init__(f"unknown character {char!r}", position)
        self.char = char


class UnexpectedToken(ExprSyntaxError):
    def __init__(self, text: str, position: int, expected: Optional[str] = None):
        message = f"unexpected {text!r}"
        if expected:
            message += f", expected {expected}"
        super().__init__(message, position)
        self.text = text


class UnexpectedEnd(ExprSyntaxError):
    def __init__(self, position: int, expected: Optional[str] = None):
        message = "unexpected end of input"
        if expected:
            message += f", expected {expected}"
        super().__init__(message, position)


class UnknownGeneratorError(IsoGrassError):
    def __init__(self, name: str, available: Sequence[str]):
        names = ", ".join(available) if available else "(none)"
        super().__init__(f"unknown generator {name!r}; available: {names}")
        self.name = name
        self.available = tuple(available)
