"""Schubert calculus on complex Grassmannians via the Pieri rule.

The classes of the complex Grassmannian of k-planes in C^{k+w} are indexed by
partitions inside the k x w box. Only multiplication by the special classes
sigma_r is implemented: add a horizontal strip of r boxes in every possible
way and drop shapes that leave the box. That is enough for Betti numbers and
for powers of sigma_1, and it shares no code with :mod:`idealalg`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from math import comb
from typing import Iterator, Mapping, NamedTuple, Optional

from isograss.core.errors import IncompatibleRingsError, ParameterError
from isograss.core.polyring import Scalar, format_rational
from isograss.core.series import PoincareSeries


@total_ordering
@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ParameterError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ParameterError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        return self.parts[i] if i < len(self.parts) else 0

    def fits_in_box(self, rows: int, width: int) -> bool:
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= width)

    def complement(self, rows: int, width: int) -> "Partition":
        """The shape left over in the box, rotated by 180 degrees."""
        if not self.fits_in_box(rows, width):
            raise ParameterError(f"{self} does not fit the {rows}x{width} box")
        rest = (width - self.part(rows - 1 - i) for i in range(rows))
        return Partition(tuple(p for p in rest if p))

    def _sort_key(self) -> tuple:
        return (self.size, tuple(-p for p in self.parts))

    def __lt__(self, other: "Partition") -> bool:
        return self._sort_key() < other._sort_key()

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def _check_box(rows: int, width: int):
    if rows < 0 or width < 0:
        raise ParameterError(f"box dimensions must be non-negative, got {rows}x{width}")


def partitions_in_box(rows: int, width: int) -> list[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``width``, by size."""
    _check_box(rows, width)
    found = []

    def extend(prefix: tuple[int, ...], limit: int):
        found.append(Partition(prefix))
        if len(prefix) == rows:
            return
        for part in range(1, limit + 1):
            extend(prefix + (part,), part)

    extend((), width)
    return sorted(found)


def horizontal_strips(shape: Partition, r: int, rows: int, width: int) -> list[Partition]:
    """Shapes obtained from ``shape`` by adding r boxes, no two in the same column."""
    base = [shape.part(i) for i in range(rows)]
    strips = []

    def extend(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == rows:
            if remaining == 0:
                strips.append(Partition(tuple(p for p in prefix if p)))
            return
        upper = width if i == 0 else base[i - 1]
        for value in range(base[i], min(upper, base[i] + remaining) + 1):
            extend(i + 1, remaining - (value - base[i]), prefix + (value,))

    extend(0, r, ())
    return strips


@dataclass(frozen=True)
class SchubertElement:
    """A rational combination of Schubert classes in a fixed box."""

    rows: int
    width: int
    coefficients: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        _check_box(self.rows, self.width)
        clean = {}
        for shape, value in self.coefficients.items():
            if not shape.fits_in_box(self.rows, self.width):
                raise ParameterError(f"{shape} does not fit the {self.rows}x{self.width} box")
            value = Fraction(value)
            if value:
                clean[shape] = value
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def sigma(cls, rows: int, width: int, *parts: int) -> "SchubertElement":
        return cls(rows, width, {Partition(tuple(parts)): 1})

    @classmethod
    def unit(cls, rows: int, width: int) -> "SchubertElement":
        return cls.sigma(rows, width)

    @property
    def box(self) -> tuple[int, int]:
        return (self.rows, self.width)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def degree(self) -> Optional[int]:
        """Topological degree 2|lambda| when every term has the same size."""
        sizes = {shape.size for shape in self.coefficients}
        return 2 * sizes.pop() if len(sizes) == 1 else None

    def coefficient(self, *parts: int) -> Fraction:
        return self.coefficients.get(Partition(tuple(parts)), Fraction(0))

    def __add__(self, other: "SchubertElement") -> "SchubertElement":
        if other.box != self.box:
            raise IncompatibleRingsError(f"boxes differ: {self.box} and {other.box}")
        total = dict(self.coefficients)
        for shape, value in other.coefficients.items():
            total[shape] = total.get(shape, 0) + value
        return SchubertElement(self.rows, self.width, total)

    def scale(self, factor: Scalar) -> "SchubertElement":
        return SchubertElement(
            self.rows, self.width, {s: v * factor for s, v in self.coefficients.items()}
        )

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for shape in sorted(self.coefficients, reverse=True):
            value = self.coefficients[shape]
            name = "sigma" + str(list(shape.parts)).replace(" ", "")
            terms.append(name if value == 1 else f"{format_rational(value)}*{name}")
        return " + ".join(terms)


def pieri(x: SchubertElement, r: int) -> SchubertElement:
    """
    Multiply by the special class sigma_r (Pieri rule).

    Each shape grows by every horizontal r-strip that stays inside the box.

    Args:
        x: Element of the Grassmannian's cohomology
        r: Degree of the special class, at least 1

    Returns:
        x * sigma_r in the same box

    Raises:
        ParameterError: If r < 1
    """
    if r < 1:
        raise ParameterError(f"Pieri degree must be positive, got {r}")
    product: dict[Partition, Fraction] = {}
    for shape, value in x.coefficients.items():
        for grown in horizontal_strips(shape, r, x.rows, x.width):
            product[grown] = product.get(grown, 0) + value
    return SchubertElement(x.rows, x.width, product)


def sigma1_power(rows: int, width: int, t: int) -> SchubertElement:
    element = SchubertElement.unit(rows, width)
    for _ in range(t):
        element = pieri(element, 1)
    return element


def sigma1_height(rows: int, width: int) -> int:
    """
    Largest t with sigma_1^t nonzero.

    Args:
        rows: Number of rows of the box (k)
        width: Number of columns of the box (n-k)

    Returns:
        The height, which equals rows * width
    """
    _check_box(rows, width)
    element = SchubertElement.unit(rows, width)
    t = 0
    while True:
        element = pieri(element, 1)
        if element.is_zero:
            return t
        t += 1


class BettiSummary(NamedTuple):
    series: PoincareSeries
    euler: int


def betti_and_euler(rows: int, width: int) -> BettiSummary:
    """
    Betti numbers and Euler characteristic of the Grassmannian with the given box.

    Args:
        rows: Number of rows of the box
        width: Number of columns of the box

    Returns:
        The series, where x^{2j} counts partitions of size j, and C(rows + width, rows)
    """
    coefficients = [0] * (2 * rows * width + 1)
    for shape in partitions_in_box(rows, width):
        coefficients[2 * shape.size] += 1
    return BettiSummary(PoincareSeries(coefficients), comb(rows + width, rows))
