"""Exact rational scalars and graded polynomial arithmetic.

Polynomials live over a :class:`GeneratorAlphabet`, an ordered list of named
generators with positive degrees. Every generator used by the presentations
sits in even topological degree, so the ring is strictly commutative; odd
exterior classes are tracked by :mod:`isograss.core.presentations` as a list
of degrees and never appear here.

Monomials are exponent tuples, one entry per alphabet generator. They are
ordered graded-lex: first by weighted degree, then lexicographically by
exponent vector, so the first generator of the alphabet is the largest.
Enumerations and renderings list the largest monomial first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Union

from isograss.core.errors import IncompatibleRingsError, ParameterError

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]

GENERATOR_NAME = re.compile(r"(?:[pc][0-9]+|e)'?")
_RATIONAL = re.compile(r"\s*(-?[0-9]+)(?:/([0-9]+))?\s*")


def format_rational(value: Scalar) -> str:
    """Render a rational as ``a`` or ``a/b`` in lowest terms."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`."""
    match = _RATIONAL.fullmatch(text)
    if not match:
        raise ParameterError(f"not a rational literal: {text!r}")
    denominator = int(match.group(2) or 1)
    if denominator == 0:
        raise ParameterError(f"zero denominator in {text!r}")
    return Fraction(int(match.group(1)), denominator)


@lru_cache(maxsize=None)
def _monomials(degrees: tuple[int, ...], d: int) -> tuple[Monomial, ...]:
    if not degrees:
        return ((),) if d == 0 else ()
    head, rest = degrees[0], degrees[1:]
    found = []
    for exponent in range(d // head, -1, -1):
        for tail in _monomials(rest, d - exponent * head):
            found.append((exponent,) + tail)
    return tuple(found)


@dataclass(frozen=True)
class GeneratorAlphabet:
    """Ordered generator names with their degrees.

    The order is fixed for the lifetime of the alphabet; monomial comparisons
    and the pivot choice of normal forms depend on it.
    """

    entries: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.entries]
        if len(set(names)) != len(names):
            raise ParameterError(f"duplicate generator names in {names}")
        for name, degree in self.entries:
            if not GENERATOR_NAME.fullmatch(name):
                raise ParameterError(f"generator name {name!r} is not p<i>, c<i> or e")
            if degree < 1:
                raise ParameterError(f"generator {name} has degree {degree} < 1")

    @classmethod
    def of(cls, *pairs: tuple[str, int]) -> "GeneratorAlphabet":
        """Build an alphabet from ``(name, degree)`` pairs, e.g. ``of(("c2", 4), ("e", 2))``."""
        return cls(tuple((str(name), int(degree)) for name, degree in pairs))

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.entries)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(degree for _, degree in self.entries)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, name: object) -> bool:
        return name in self._positions

    def index(self, name: str) -> int:
        return self._positions[name]

    def degree_of(self, name: str) -> int:
        return self.degrees[self.index(name)]

    def monomial_degree(self, monomial: Monomial) -> int:
        return sum(e * d for e, d in zip(monomial, self.degrees))

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.entries)

    def monomials_of_degree(self, d: int) -> tuple[Monomial, ...]:
        return monomials_of_degree(self, d)

    def render_monomial(self, monomial: Monomial) -> str:
        factors = []
        for name, exponent in zip(self.names, monomial):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{exponent}")
        return "*".join(factors)

    def zero(self) -> "GradedPoly":
        return GradedPoly(self)

    def one(self) -> "GradedPoly":
        return self.constant(1)

    def constant(self, value: Scalar) -> "GradedPoly":
        return GradedPoly(self, {self.unit_monomial(): value})

    def generator(self, name: str) -> "GradedPoly":
        exponents = [0] * len(self.entries)
        exponents[self.index(name)] = 1
        return GradedPoly(self, {tuple(exponents): 1})

    def __str__(self) -> str:
        inner = ", ".join(f"{name}:{degree}" for name, degree in self.entries)
        return "{" + inner + "}"


def monomials_of_degree(alphabet: GeneratorAlphabet, d: int) -> tuple[Monomial, ...]:
    """All monomials of weighted degree exactly ``d``, largest first."""
    if d < 0:
        raise ParameterError(f"degree must be non-negative, got {d}")
    return _monomials(alphabet.degrees, d)


class GradedPoly:
    """An immutable polynomial with exact rational coefficients."""

    __slots__ = ("_alphabet", "_terms")

    def __init__(
        self,
        alphabet: GeneratorAlphabet,
        terms: Optional[Mapping[Monomial, Scalar]] = None,
    ):
        clean: dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            monomial = tuple(int(e) for e in monomial)
            if len(monomial) != len(alphabet) or any(e < 0 for e in monomial):
                raise ParameterError(f"exponent vector {monomial} does not fit {alphabet}")
            coefficient = Fraction(coefficient)
            if coefficient:
                clean[monomial] = coefficient
        self._alphabet = alphabet
        self._terms = clean

    @classmethod
    def _trusted(cls, alphabet: GeneratorAlphabet, terms: dict[Monomial, Fraction]) -> "GradedPoly":
        poly = cls.__new__(cls)
        poly._alphabet = alphabet
        poly._terms = terms
        return poly

    @property
    def alphabet(self) -> GeneratorAlphabet:
        return self._alphabet

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in graded-lex order, largest monomial first."""
        degree = self._alphabet.monomial_degree
        return sorted(self._terms.items(), key=lambda t: (degree(t[0]), t[0]), reverse=True)

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(tuple(monomial), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degrees(self) -> list[int]:
        return sorted({self._alphabet.monomial_degree(m) for m in self._terms})

    @property
    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        degrees = self.degrees()
        if len(degrees) != 1:
            raise ParameterError(f"{self} is not a nonzero homogeneous polynomial")
        return degrees[0]

    def homogeneous_part(self, d: int) -> "GradedPoly":
        degree = self._alphabet.monomial_degree
        return GradedPoly._trusted(
            self._alphabet, {m: c for m, c in self._terms.items() if degree(m) == d}
        )

    def homogeneous_parts(self) -> dict[int, "GradedPoly"]:
        return {d: self.homogeneous_part(d) for d in self.degrees()}

    def _coerce(self, other: object) -> Optional["GradedPoly"]:
        if isinstance(other, GradedPoly):
            if other._alphabet != self._alphabet:
                raise IncompatibleRingsError(
                    f"cannot combine polynomials over {self._alphabet} and {other._alphabet}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self._alphabet.constant(other)
        return None

    def __add__(self, other: object) -> "GradedPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            total = terms.get(monomial, 0) + coefficient
            if total:
                terms[monomial] = total
            else:
                terms.pop(monomial, None)
        return GradedPoly._trusted(self._alphabet, terms)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        return GradedPoly._trusted(self._alphabet, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "GradedPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "GradedPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "GradedPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = tuple(a + b for a, b in zip(m1, m2))
                total = terms.get(monomial, 0) + c1 * c2
                if total:
                    terms[monomial] = total
                else:
                    terms.pop(monomial, None)
        return GradedPoly._trusted(self._alphabet, terms)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "GradedPoly":
        factor = Fraction(factor)
        if not factor:
            return self._alphabet.zero()
        return GradedPoly._trusted(self._alphabet, {m: c * factor for m, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "GradedPoly":
        return power(self, exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._alphabet.constant(other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self._alphabet == other._alphabet and self._terms == other._terms

    def __hash__(self) -> int:
        # hash(poly) == hash(c) whenever poly == c for a scalar c
        unit = self._alphabet.unit_monomial()
        if not self._terms:
            return hash(0)
        if len(self._terms) == 1 and unit in self._terms:
            return hash(self._terms[unit])
        return hash((self._alphabet, frozenset(self._terms.items())))

    def render(self) -> str:
        """Canonical text: graded-lex terms, ``a/b`` coefficients, ``name^k`` powers."""
        if not self._terms:
            return "0"
        pieces = []
        for i, (monomial, coefficient) in enumerate(self.terms()):
            body = self._alphabet.render_monomial(monomial)
            magnitude = abs(coefficient)
            if not body:
                text = format_rational(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{format_rational(magnitude)}*{body}"
            if i == 0:
                pieces.append(f"-{text}" if coefficient < 0 else text)
            else:
                pieces.append(f" - {text}" if coefficient < 0 else f" + {text}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"GradedPoly({self.render()!r})"


def add(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    """
    Sum of two polynomials over the same alphabet.

    Raises:
        IncompatibleRingsError: If the alphabets differ
    """
    return a + b


def mul(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    """
    Product of two polynomials over the same alphabet.

    Raises:
        IncompatibleRingsError: If the alphabets differ
    """
    return a * b


def power(a: GradedPoly, t: int) -> GradedPoly:
    """
    ``a`` multiplied by itself ``t`` times, by repeated squaring.

    Args:
        a: Any polynomial
        t: Non-negative exponent; ``power(a, 0)`` is 1

    Returns:
        The product a * ... * a

    Raises:
        ParameterError: If t is negative
    """
    if t < 0:
        raise ParameterError(f"exponent must be non-negative, got {t}")
    result = a.alphabet.one()
    base = a
    while t:
        if t & 1:
            result = result * base
        t >>= 1
        if t:
            base = base * base
    return result


def linear_combination(
    pairs: Iterable[tuple[Scalar, GradedPoly]], alphabet: GeneratorAlphabet
) -> GradedPoly:
    """
    Sum of ``coefficient * poly`` over the pairs.

    Args:
        pairs: Scalars with the polynomials they multiply
        alphabet: Alphabet of the result, used when pairs is empty

    Returns:
        The combination, zero for no pairs
    """
    total = alphabet.zero()
    for coefficient, poly in pairs:
        total = total + poly.scale(coefficient)
    return total
