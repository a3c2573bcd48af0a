"""Finitely supported Poincaré series with non-negative integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from isograss.core.errors import ParameterError


def _strip(coefficients: Iterable[int]) -> tuple[int, ...]:
    values = [int(c) for c in coefficients]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class PoincareSeries:
    """Coefficient ``coefficients[d]`` is the rank in degree ``d``.

    Trailing zeros are stripped, so two series are equal exactly when all
    their coefficients agree.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        stripped = _strip(self.coefficients)
        if any(c < 0 for c in stripped):
            raise ParameterError(f"Poincaré series coefficients must be non-negative: {stripped}")
        object.__setattr__(self, "coefficients", stripped)

    @classmethod
    def one(cls) -> "PoincareSeries":
        return cls((1,))

    @classmethod
    def exterior(cls, degrees: Iterable[int]) -> "PoincareSeries":
        """Π (1 + x^d) over the given degrees."""
        result = cls.one()
        for d in degrees:
            result = result * (cls.one() + cls.monomial(d))
        return result

    @classmethod
    def monomial(cls, d: int, coefficient: int = 1) -> "PoincareSeries":
        if d < 0:
            raise ParameterError(f"degree must be non-negative, got {d}")
        return cls((0,) * d + (coefficient,))

    def coefficient(self, d: int) -> int:
        if 0 <= d < len(self.coefficients):
            return self.coefficients[d]
        return 0

    @property
    def top_degree(self) -> Optional[int]:
        """Largest degree with a nonzero coefficient; None for the zero series."""
        if not self.coefficients:
            return None
        return len(self.coefficients) - 1

    @property
    def total_rank(self) -> int:
        return sum(self.coefficients)

    @property
    def euler(self) -> int:
        return sum(c if d % 2 == 0 else -c for d, c in enumerate(self.coefficients))

    def is_palindromic(self, top: Optional[int] = None) -> bool:
        """Whether b_d = b_{top-d} for every d, with ``top`` defaulting to the top degree."""
        if top is None:
            top = self.top_degree
        if top is None:
            return True
        if self.top_degree is not None and self.top_degree > top:
            return False
        return all(self.coefficient(d) == self.coefficient(top - d) for d in range(top + 1))

    def truncated(self, max_degree: int) -> "PoincareSeries":
        return PoincareSeries(self.coefficients[: max_degree + 1])

    def first_excess_over(self, other: "PoincareSeries") -> Optional[int]:
        """Smallest degree where this series is larger than ``other``."""
        for d, c in enumerate(self.coefficients):
            if c > other.coefficient(d):
                return d
        return None

    def __add__(self, other: "PoincareSeries") -> "PoincareSeries":
        size = max(len(self.coefficients), len(other.coefficients))
        return PoincareSeries(self.coefficient(d) + other.coefficient(d) for d in range(size))

    def __mul__(self, other: "PoincareSeries") -> "PoincareSeries":
        if not self.coefficients or not other.coefficients:
            return PoincareSeries()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return PoincareSeries(product)

    def __str__(self) -> str:
        terms = []
        for d, c in enumerate(self.coefficients):
            if not c:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                power = "x" if d == 1 else f"x^{d}"
                terms.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(terms) if terms else "0"
