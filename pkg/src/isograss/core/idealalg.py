"""Exact linear algebra on graded slices of homogeneous ideals.

Every query is answered one degree at a time. The degree-d slice of an ideal
is spanned by the products ``m * r`` of relations with monomials; these rows
are expressed in the degree-d monomial basis and brought to echelon form by
fraction-free integer elimination. Columns follow the order of
:func:`~isograss.core.polyring.monomials_of_degree`, so the pivot of each row
is its largest monomial.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence, Union

from isograss.core.errors import (
    HeightOverflow,
    IncompatibleRingsError,
    NotCompleteIntersectionError,
    ParameterError,
    QuotientNotFiniteError,
)
from isograss.core.polyring import GeneratorAlphabet, GradedPoly, Monomial, monomials_of_degree
from isograss.core.series import PoincareSeries

logger = logging.getLogger(__name__)

Row = dict[int, int]

DEFAULT_SCAN_LIMIT = 4096


def _primitive(row: Row) -> Row:
    divisor = 0
    for value in row.values():
        divisor = gcd(divisor, value)
    if row[min(row)] < 0:
        divisor = -divisor
    return {c: v // divisor for c, v in row.items()}


class EchelonSlice:
    """Echelon basis of one graded slice of an ideal."""

    def __init__(self, alphabet: GeneratorAlphabet, d: int):
        self.degree = d
        self.columns: tuple[Monomial, ...] = monomials_of_degree(alphabet, d)
        self.index = {monomial: i for i, monomial in enumerate(self.columns)}
        self.pivots: dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def is_full(self) -> bool:
        return len(self.pivots) == len(self.columns)

    def insert(self, row: Row) -> bool:
        """Reduce ``row`` against the pivots and keep it if anything is left."""
        while row:
            lead = min(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                self.pivots[lead] = _primitive(row)
                return True
            a, b = row[lead], pivot[lead]
            merged = {c: b * v for c, v in row.items()}
            for c, v in pivot.items():
                value = merged.get(c, 0) - a * v
                if value:
                    merged[c] = value
                else:
                    merged.pop(c, None)
            row = _primitive(merged) if merged else merged
        return False

    def reduce(self, vector: dict[int, Fraction]) -> dict[int, Fraction]:
        """Residue of ``vector`` with every pivot column cleared."""
        vector = dict(vector)
        for column in sorted(self.pivots):
            a = vector.get(column)
            if not a:
                continue
            pivot = self.pivots[column]
            factor = Fraction(a) / pivot[column]
            for c, v in pivot.items():
                value = vector.get(c, 0) - factor * v
                if value:
                    vector[c] = value
                else:
                    vector.pop(c, None)
        return vector

    def standard_monomials(self) -> list[Monomial]:
        return [m for i, m in enumerate(self.columns) if i not in self.pivots]


class HomogeneousIdeal:
    """An ideal generated by nonzero homogeneous polynomials over one alphabet."""

    def __init__(self, alphabet: GeneratorAlphabet, relations: Iterable[GradedPoly] = ()):
        relations = tuple(relations)
        for relation in relations:
            if relation.alphabet != alphabet:
                raise IncompatibleRingsError(f"relation {relation} is not over {alphabet}")
            if relation.is_zero:
                raise ParameterError("ideal relations must be nonzero")
            if not relation.is_homogeneous:
                raise ParameterError(f"relation {relation} is not homogeneous")
        self.alphabet = alphabet
        self.relations = relations
        self._slices: dict[int, EchelonSlice] = {}

    def __repr__(self) -> str:
        body = ", ".join(r.render() for r in self.relations)
        return f"HomogeneousIdeal({body})"

    def relation_degrees(self) -> list[int]:
        return [r.degree for r in self.relations]

    def slice(self, d: int) -> EchelonSlice:
        if d < 0:
            raise ParameterError(f"degree must be non-negative, got {d}")
        cached = self._slices.get(d)
        if cached is not None:
            return cached
        echelon = EchelonSlice(self.alphabet, d)
        for relation in self.relations:
            if echelon.is_full:
                break
            shift = d - relation.degree
            if shift < 0:
                continue
            scale = lcm(*(c.denominator for _, c in relation.items()))
            base = [(m, int(c * scale)) for m, c in relation.items()]
            for multiplier in monomials_of_degree(self.alphabet, shift):
                row = {
                    echelon.index[tuple(a + b for a, b in zip(m, multiplier))]: c
                    for m, c in base
                }
                echelon.insert(row)
                if echelon.is_full:
                    break
        logger.debug(
            "degree %d slice: %d monomials, rank %d", d, len(echelon.columns), echelon.rank
        )
        self._slices[d] = echelon
        return echelon

    def contains(self, x: GradedPoly) -> bool:
        return QuotientRing(self).normal_form(x).is_zero


class QuotientRing:
    """The graded quotient of the free commutative ring by a homogeneous ideal."""

    def __init__(self, ideal: HomogeneousIdeal, top_degree_hint: Optional[int] = None):
        self.ideal = ideal
        self.top_degree_hint = top_degree_hint
        self._top_degree: Optional[int] = None

    @classmethod
    def of(cls, alphabet: GeneratorAlphabet, relations: Iterable[GradedPoly] = (), **kwargs):
        return cls(HomogeneousIdeal(alphabet, relations), **kwargs)

    @property
    def alphabet(self) -> GeneratorAlphabet:
        return self.ideal.alphabet

    def normal_form(self, x: GradedPoly) -> GradedPoly:
        if x.alphabet != self.alphabet:
            raise IncompatibleRingsError(f"{x} is not over {self.alphabet}")
        terms: dict[Monomial, Fraction] = {}
        for d, part in x.homogeneous_parts().items():
            echelon = self.ideal.slice(d)
            vector = {echelon.index[m]: c for m, c in part.items()}
            for column, value in echelon.reduce(vector).items():
                terms[echelon.columns[column]] = value
        return GradedPoly(self.alphabet, terms)

    def is_zero(self, x: GradedPoly) -> bool:
        return self.normal_form(x).is_zero

    def graded_dimension(self, d: int) -> int:
        echelon = self.ideal.slice(d)
        return len(echelon.columns) - echelon.rank

    def standard_monomials(self, d: int) -> list[Monomial]:
        return self.ideal.slice(d).standard_monomials()

    def top_degree(self, limit: int = DEFAULT_SCAN_LIMIT) -> int:
        """Largest degree with a nonzero graded piece.

        The scan stops once the quotient vanishes in as many consecutive
        degrees as the largest generator degree; every higher monomial is a
        multiple of one in that window.
        """
        if self._top_degree is not None:
            return self._top_degree
        if self.graded_dimension(0) == 0:
            raise ParameterError("quotient is the zero ring")
        window = max(self.alphabet.degrees, default=0)
        top, zeros, d = 0, 0, 1
        while zeros < window:
            if d > limit:
                raise QuotientNotFiniteError(
                    f"quotient over {self.alphabet} is nonzero beyond degree {limit}"
                )
            if self.graded_dimension(d):
                top, zeros = d, 0
            else:
                zeros += 1
            d += 1
        logger.debug("quotient over %s has top degree %d", self.alphabet, top)
        self._top_degree = top
        return top

    def default_height_cap(self, x: GradedPoly) -> int:
        top = self.top_degree_hint if self.top_degree_hint is not None else self.top_degree()
        return top // x.degree + 1

    def height(self, x: GradedPoly, cap: Optional[int] = None) -> int:
        """Largest t with x^t nonzero in the quotient; 0 when x itself is zero."""
        current = self.normal_form(x)
        if current.is_zero:
            return 0
        if not x.is_homogeneous or x.degree == 0:
            raise ParameterError(f"height needs a homogeneous element of positive degree, got {x}")
        if cap is None:
            cap = self.default_height_cap(x)
        if cap < 1:
            raise ParameterError(f"height cap must be positive, got {cap}")
        t = 1
        while True:
            if t >= cap:
                raise HeightOverflow(cap)
            current = self.normal_form(current * x)
            if current.is_zero:
                return t
            t += 1

    def poincare_polynomial(self, max_degree: int) -> PoincareSeries:
        if max_degree < 0:
            raise ParameterError(f"max_degree must be non-negative, got {max_degree}")
        return PoincareSeries(self.graded_dimension(d) for d in range(max_degree + 1))


def slice_rank(ideal: HomogeneousIdeal, d: int) -> int:
    """
    Dimension of the degree-``d`` part of an ideal.

    Args:
        ideal: Ideal generated by homogeneous relations
        d: Weighted degree

    Returns:
        Rank of the echelonized slice
    """
    return ideal.slice(d).rank


def normal_form(q: QuotientRing, x: GradedPoly) -> GradedPoly:
    """
    Canonical representative of ``x`` modulo the ideal of ``q``.

    Args:
        q: Quotient ring
        x: Polynomial over the alphabet of ``q``, not necessarily homogeneous

    Returns:
        A combination of standard monomials; zero exactly when x lies in the ideal

    Raises:
        IncompatibleRingsError: If x lives over another alphabet
    """
    return q.normal_form(x)


def graded_dimension(q: QuotientRing, d: int) -> int:
    """
    Dimension of the quotient in degree ``d``.

    Args:
        q: Quotient ring
        d: Weighted degree

    Returns:
        Number of degree-d monomials minus the slice rank of the ideal
    """
    return q.graded_dimension(d)


def height(q: QuotientRing, x: GradedPoly, cap: Optional[int] = None) -> int:
    """
    Largest t with x^t nonzero in ``q``.

    Args:
        q: Quotient ring
        x: Homogeneous element of positive degree
        cap: Give up once t reaches this value; defaults to top // deg(x) + 1

    Returns:
        The height, 0 when x is zero in the quotient

    Raises:
        HeightOverflow: If x^t is still nonzero at t = cap
        ParameterError: If x is not homogeneous of positive degree
    """
    return q.height(x, cap)


def poincare_polynomial(q: QuotientRing, max_degree: int) -> PoincareSeries:
    """
    Graded dimensions of ``q`` in degrees 0 through ``max_degree``.

    Raises:
        ParameterError: If max_degree is negative
    """
    return q.poincare_polynomial(max_degree)


def complete_intersection_series(
    gens: Union[GeneratorAlphabet, Sequence[int]],
    relation_degrees: Sequence[int],
    max_degree: int,
) -> PoincareSeries:
    """
    Truncation of Π(1 - x^r) / Π(1 - x^g) to ``max_degree``.

    Args:
        gens: An alphabet or a plain list of generator degrees
        relation_degrees: Degrees of a presumed regular sequence
        max_degree: Last degree kept

    Returns:
        The truncated series

    Raises:
        NotCompleteIntersectionError: If a coefficient comes out negative, so the
            relations cannot form a regular sequence
        ParameterError: If a degree is not positive or max_degree is negative
    """
    degrees = gens.degrees if isinstance(gens, GeneratorAlphabet) else tuple(gens)
    if max_degree < 0:
        raise ParameterError(f"max_degree must be non-negative, got {max_degree}")
    if any(g < 1 for g in degrees) or any(r < 1 for r in relation_degrees):
        raise ParameterError("generator and relation degrees must be positive")
    coefficients = [0] * (max_degree + 1)
    coefficients[0] = 1
    for g in degrees:
        for d in range(g, max_degree + 1):
            coefficients[d] += coefficients[d - g]
    for r in relation_degrees:
        for d in range(max_degree, r - 1, -1):
            coefficients[d] -= coefficients[d - r]
    negative = [d for d, c in enumerate(coefficients) if c < 0]
    if negative:
        raise NotCompleteIntersectionError(
            f"degrees {list(degrees)} modulo {list(relation_degrees)} give a negative "
            f"coefficient in degree {negative[0]}"
        )
    return PoincareSeries(coefficients)
