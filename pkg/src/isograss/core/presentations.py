"""Ring presentations and cohomological fact sheets.

Generators are named after characteristic classes: ``c<i>`` are Chern classes
of the complement bundle gamma_{n-k} (degree 2i), ``p<j>`` Pontryagin classes
of the tautological bundle xi_k (degree 4j) and ``e`` its Euler class
(degree k, present only for even k, where the top Pontryagin class is e^2).
Primed names belong to the complement bundle of a real Grassmannian.

Alphabets list the classes that relations eliminate first: Chern classes
before Pontryagin classes, complement classes before tautological ones.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import NamedTuple, Optional

from pydantic import BaseModel, ConfigDict

from isograss.core.errors import ParameterError, TopDegreeMismatch, UnsupportedSpaceError
from isograss.core.idealalg import HomogeneousIdeal, QuotientRing, complete_intersection_series
from isograss.core.polyring import GeneratorAlphabet, GradedPoly
from isograss.core.schubert import partitions_in_box
from isograss.core.series import PoincareSeries
from isograss.core.spaces import (
    ComplexGrass,
    IsotropicOriented,
    RealOriented,
    Sphere,
    SpaceId,
    dimension,
    normalize,
    sphere_equivalent,
)

logger = logging.getLogger(__name__)


def _check_isotropic(n: int, k: int, *, lowest_k: int = 1, proper: bool = True):
    upper = n - 1 if proper else n
    if not lowest_k <= k <= upper:
        relation = "<" if proper else "<="
        raise ParameterError(f"need {lowest_k} <= k {relation} n, got (n, k) = ({n}, {k})")


def _tautological_entries(k: int, prime: str = "") -> list[tuple[str, int]]:
    """Pontryagin and Euler generators of an oriented rank-k bundle."""
    half = k // 2
    if k % 2:
        return [(f"p{j}{prime}", 4 * j) for j in range(1, half + 1)]
    return [(f"p{j}{prime}", 4 * j) for j in range(1, half)] + [(f"e{prime}", k)]


def sieve_alphabet(n: int, k: int) -> GeneratorAlphabet:
    """All Chern classes c_1..c_{n-k} followed by the classes of xi_k."""
    _check_isotropic(n, k, proper=False)
    chern = [(f"c{i}", 2 * i) for i in range(1, n - k + 1)]
    return GeneratorAlphabet(tuple(chern + _tautological_entries(k)))


def a_alphabet(n: int, k: int) -> GeneratorAlphabet:
    """Even Chern classes up to the largest even index <= n-k, then the classes of xi_k."""
    _check_isotropic(n, k, lowest_k=2)
    chern = [(f"c{i}", 2 * i) for i in range(2, n - k + 1, 2)]
    return GeneratorAlphabet(tuple(chern + _tautological_entries(k)))


def pontryagin_class(alphabet: GeneratorAlphabet, j: int, k: int, prime: str = "") -> GradedPoly:
    """p_j of an oriented rank-k bundle; p_{k/2} = e^2 for even k, zero above the rank."""
    if j == 0:
        return alphabet.one()
    name = f"p{j}{prime}"
    if name in alphabet:
        return alphabet.generator(name)
    if k % 2 == 0 and j == k // 2:
        return alphabet.generator(f"e{prime}") ** 2
    return alphabet.zero()


def chern_class(alphabet: GeneratorAlphabet, t: int) -> GradedPoly:
    """c_t when it is a generator of the alphabet, zero otherwise."""
    if t == 0:
        return alphabet.one()
    name = f"c{t}"
    return alphabet.generator(name) if name in alphabet else alphabet.zero()


def differential(
    i: int, n: int, k: int, alphabet: Optional[GeneratorAlphabet] = None
) -> GradedPoly:
    """Image of the fibre class x_{2i-1}: the sum of p_j * c_{i-2j} for j <= i/2."""
    _check_isotropic(n, k, proper=False)
    if not 1 <= i <= n:
        raise ParameterError(f"need 1 <= i <= n, got i = {i}, n = {n}")
    if alphabet is None:
        alphabet = sieve_alphabet(n, k)
    total = alphabet.zero()
    for j in range(i // 2 + 1):
        total = total + pontryagin_class(alphabet, j, k) * chern_class(alphabet, i - 2 * j)
    return total


class SieveOutcome(str, Enum):
    RELATION = "Relation"
    SURVIVOR = "Survivor"
    CONSUMED_ELIMINATOR = "ConsumedEliminator"


@dataclass(frozen=True)
class SieveStep:
    index: int
    differential: GradedPoly
    reduction: GradedPoly
    outcome: SieveOutcome

    @property
    def survivor_degree(self) -> Optional[int]:
        return 2 * self.index - 1 if self.outcome is SieveOutcome.SURVIVOR else None


@dataclass(frozen=True)
class SieveTrace:
    n: int
    k: int
    steps: tuple[SieveStep, ...]

    @property
    def relations(self) -> list[GradedPoly]:
        return [s.differential for s in self.steps if s.outcome is not SieveOutcome.SURVIVOR]

    @property
    def exterior(self) -> list[int]:
        return [s.survivor_degree for s in self.steps if s.outcome is SieveOutcome.SURVIVOR]


class SieveResult(NamedTuple):
    relations: list[GradedPoly]
    exterior: list[int]
    trace: SieveTrace


def survivor_sieve(n: int, k: int) -> SieveResult:
    """
    Sort each differential d(x_{2i-1}), i = 1..n, into a relation or an exterior survivor.

    A differential already in the ideal of the accepted relations leaves its
    fibre class behind as an exterior generator of degree 2i-1.

    Args:
        n: Half the ambient dimension
        k: Plane dimension, 1 <= k < n

    Returns:
        The accepted relations, the survivor degrees and the step-by-step trace

    Raises:
        ParameterError: If (n, k) is out of range
    """
    _check_isotropic(n, k)
    alphabet = sieve_alphabet(n, k)
    accepted: list[GradedPoly] = []
    steps = []
    for i in range(1, n + 1):
        image = differential(i, n, k, alphabet)
        reduction = QuotientRing.of(alphabet, accepted).normal_form(image)
        if reduction.is_zero:
            outcome = SieveOutcome.SURVIVOR
        else:
            accepted.append(image)
            odd_eliminator = i % 2 == 1 and i <= n - k
            outcome = SieveOutcome.CONSUMED_ELIMINATOR if odd_eliminator else SieveOutcome.RELATION
        logger.debug("sieve (%d, %d): d(x_%d) = %s -> %s", n, k, 2 * i - 1, image, outcome.value)
        steps.append(SieveStep(i, image, reduction, outcome))
    trace = SieveTrace(n, k, tuple(steps))
    return SieveResult(trace.relations, trace.exterior, trace)


def remark_exterior_formula(n: int, k: int) -> list[int]:
    """Consecutive odd degrees from 4[(n-k+1)/2]+1 up to 2n-3 (n, k even) or 2n-1."""
    _check_isotropic(n, k, lowest_k=2)
    start = 4 * ((n - k + 1) // 2) + 1
    end = 2 * n - 3 if n % 2 == 0 and k % 2 == 0 else 2 * n - 1
    return list(range(start, end + 1, 2))


def exterior_degrees_closed_form(n: int, k: int) -> list[int]:
    """Survivor degrees: odd i with n-k < i <= n, and i = n for n even, k odd."""
    _check_isotropic(n, k)
    survivors = [i for i in range(n - k + 1, n + 1) if i % 2 == 1]
    if n % 2 == 0 and k % 2 == 1:
        survivors.append(n)
    return sorted(2 * i - 1 for i in survivors)


def quotient_degree_data(n: int, k: int) -> tuple[list[int], list[int]]:
    """Generator degrees of A(n, k) and the degrees of its nonzero relations."""
    generators = list(a_alphabet(n, k).degrees)
    skipped = n // 2 if n % 2 == 0 and k % 2 == 1 else None
    relations = [4 * j for j in range(1, n // 2 + 1) if j != skipped]
    return generators, relations


@dataclass
class Presentation:
    """A graded quotient ring tensored with an exterior algebra on odd classes."""

    alphabet: GeneratorAlphabet
    relations: tuple[GradedPoly, ...]
    label: str
    exterior_degrees: tuple[int, ...] = ()
    space: Optional[SpaceId] = None
    bundles: dict[str, str] = field(default_factory=dict)
    named: dict[str, GradedPoly] = field(default_factory=dict)
    trace: Optional[SieveTrace] = None

    def __post_init__(self):
        self.relations = tuple(self.relations)
        self.exterior_degrees = tuple(sorted(self.exterior_degrees))
        if any(d % 2 == 0 or d < 1 for d in self.exterior_degrees):
            raise ParameterError(
                f"exterior degrees must be odd and positive: {self.exterior_degrees}"
            )

    @cached_property
    def quotient(self) -> QuotientRing:
        return QuotientRing(HomogeneousIdeal(self.alphabet, self.relations))

    def named_classes(self) -> dict[str, GradedPoly]:
        """Every generator plus the derived classes recorded at build time."""
        classes = {name: self.alphabet.generator(name) for name in self.alphabet.names}
        classes.update(self.named)
        return classes

    def quotient_top_degree(self) -> int:
        return self.quotient.top_degree()

    def top_degree(self) -> int:
        return self.quotient_top_degree() + sum(self.exterior_degrees)

    def quotient_series(self) -> PoincareSeries:
        return self.quotient.poincare_polynomial(self.quotient_top_degree())

    def poincare_series(self) -> PoincareSeries:
        return self.quotient_series() * PoincareSeries.exterior(self.exterior_degrees)

    def validate_top_degree(self) -> None:
        if self.space is None:
            return
        expected = dimension(self.space)
        top = self.top_degree()
        if top != expected:
            raise TopDegreeMismatch(self.label, top, expected)
        self.quotient.top_degree_hint = top - sum(self.exterior_degrees)


def _isotropic_named(alphabet: GeneratorAlphabet, n: int, k: int) -> dict[str, GradedPoly]:
    named = {}
    for j in range(1, k // 2 + 1):
        named[f"p{j}"] = pontryagin_class(alphabet, j, k)
    for t in range(1, n - k + 1):
        named[f"c{t}"] = chern_class(alphabet, t)
    return named


def _isotropic_bundles(alphabet: GeneratorAlphabet, n: int, k: int) -> dict[str, str]:
    return {
        name: f"gamma_{n - k}" if name.startswith("c") else f"xi_{k}" for name in alphabet.names
    }


def build_quotient_A(n: int, k: int) -> Presentation:
    """
    A(n, k): even Chern and tautological classes modulo the nonzero d(x_{4j-1}).

    Args:
        n: Half the ambient dimension
        k: Plane dimension, 2 <= k < n

    Returns:
        The presentation, with p_j and c_i recorded as named classes

    Raises:
        ParameterError: If (n, k) is out of range
    """
    _check_isotropic(n, k, lowest_k=2)
    alphabet = a_alphabet(n, k)
    relations: list[GradedPoly] = []
    for j in range(1, n // 2 + 1):
        image = differential(2 * j, n, k, alphabet)
        if image.is_zero:
            continue
        if relations and QuotientRing.of(alphabet, relations).normal_form(image).is_zero:
            continue
        relations.append(image)
    return Presentation(
        alphabet=alphabet,
        relations=tuple(relations),
        label=f"A({n},{k})",
        bundles=_isotropic_bundles(alphabet, n, k),
        named=_isotropic_named(alphabet, n, k),
    )


def build_full_isotropic(n: int, k: int) -> Presentation:
    """
    Cohomology of the oriented isotropic Grassmannian, A(n, k) with the sieve survivors.

    Args:
        n: Half the ambient dimension
        k: Plane dimension, 2 <= k < n

    Returns:
        A presentation whose top degree has been checked against the dimension

    Raises:
        ParameterError: If (n, k) is out of range
        TopDegreeMismatch: If the ring does not reach the manifold dimension
    """
    _check_isotropic(n, k, lowest_k=2)
    quotient = build_quotient_A(n, k)
    sieve = survivor_sieve(n, k)
    space = IsotropicOriented(n=n, k=k)
    presentation = Presentation(
        alphabet=quotient.alphabet,
        relations=quotient.relations,
        label=space.label,
        exterior_degrees=tuple(sieve.exterior),
        space=space,
        bundles=quotient.bundles,
        named=quotient.named,
        trace=sieve.trace,
    )
    presentation.validate_top_degree()
    return presentation


def build_sphere(d: int) -> Presentation:
    """Q[e]/(e^2) with e in degree d for even d; one exterior class otherwise."""
    if d < 1:
        raise ParameterError(f"sphere dimension must be positive, got {d}")
    space = Sphere(d=d)
    if d % 2:
        presentation = Presentation(GeneratorAlphabet(()), (), space.label, (d,), space)
    else:
        alphabet = GeneratorAlphabet.of(("e", d))
        e = alphabet.generator("e")
        presentation = Presentation(
            alphabet, (e**2,), space.label, space=space, bundles={"e": f"S^{d}"}
        )
    presentation.validate_top_degree()
    return presentation


def build_real_oriented_odd(m: int, l: int) -> Presentation:
    """
    Oriented l-planes in R^m for odd m.

    Generated by the classes of xi_l and its complement modulo p(xi)p(xi') = 1.
    The cases l = 1 and l = m-1 are spheres.

    Args:
        m: Odd ambient dimension
        l: Plane dimension, 1 <= l <= m-1

    Returns:
        The presentation; complement classes carry a prime, e.g. p1'

    Raises:
        UnsupportedSpaceError: If m is even
        ParameterError: If l is out of range
    """
    if m % 2 == 0:
        raise UnsupportedSpaceError(
            f"RG:{m},{l}: ring presentations are only available for odd ambient dimension"
        )
    if not 1 <= l <= m - 1:
        raise ParameterError(f"need 1 <= l <= m-1, got (m, l) = ({m}, {l})")
    space = RealOriented(m=m, l=l)
    equivalent = sphere_equivalent(space)
    if equivalent is not None:
        return build_sphere(equivalent.d)
    r = m - l
    alphabet = GeneratorAlphabet(tuple(_tautological_entries(r, "'") + _tautological_entries(l)))
    relations = []
    for t in range(1, (m - 1) // 2 + 1):
        component = alphabet.zero()
        for a in range(t + 1):
            component = component + pontryagin_class(alphabet, a, l) * pontryagin_class(
                alphabet, t - a, r, "'"
            )
        if not component.is_zero:
            relations.append(component)
    named = {}
    for j in range(1, l // 2 + 1):
        named[f"p{j}"] = pontryagin_class(alphabet, j, l)
    for j in range(1, r // 2 + 1):
        named[f"p{j}'"] = pontryagin_class(alphabet, j, r, "'")
    bundles = {name: f"xi_{r}'" if name.endswith("'") else f"xi_{l}" for name in alphabet.names}
    presentation = Presentation(
        alphabet, tuple(relations), space.label, space=space, bundles=bundles, named=named
    )
    presentation.validate_top_degree()
    return presentation


def build_presentation(space: SpaceId) -> Presentation:
    """
    Dispatch to the builder for a space.

    Args:
        space: Any space; sphere-equivalent ones are built as spheres

    Returns:
        The ring presentation

    Raises:
        UnsupportedSpaceError: For complex Grassmannians, which go through
            :mod:`schubert`, and for spaces without a presentation
    """
    space = normalize(space)
    if isinstance(space, Sphere):
        return build_sphere(space.d)
    if isinstance(space, IsotropicOriented):
        if space.k == space.n:
            raise UnsupportedSpaceError(
                f"{space.label}: no ring presentation for the Lagrangian case k = n"
            )
        return build_full_isotropic(space.n, space.k)
    if isinstance(space, RealOriented):
        return build_real_oriented_odd(space.m, space.l)
    raise UnsupportedSpaceError(f"{space.label}: use the Schubert calculus summary")


def isotropic_poincare_series(n: int, k: int) -> PoincareSeries:
    """Poincaré polynomial of the full isotropic ring from the closed-form degree data."""
    generators, relations = quotient_degree_data(n, k)
    top = sum(relations) - sum(generators)
    quotient = complete_intersection_series(generators, relations, top)
    return quotient * PoincareSeries.exterior(exterior_degrees_closed_form(n, k))


def real_oriented_poincare_series(m: int, l: int) -> PoincareSeries:
    """Poincaré polynomial of an oriented real Grassmannian with odd m."""
    if m % 2 == 0:
        raise UnsupportedSpaceError(f"RG:{m},{l}: closed form needs odd ambient dimension")
    equivalent = sphere_equivalent(RealOriented(m=m, l=l))
    if equivalent is not None:
        return PoincareSeries.one() + PoincareSeries.monomial(equivalent.d)
    generators = [d for _, d in _tautological_entries(m - l) + _tautological_entries(l)]
    relations = [4 * t for t in range(1, (m - 1) // 2 + 1)]
    return complete_intersection_series(generators, relations, l * (m - l))


def isotropic_h4_rank(n: int, k: int) -> int:
    """Rank of H^4 for 2 <= k < n: degree-4 monomials of A(n, k) minus the relation d(x_3)."""
    _check_isotropic(n, k, lowest_k=2)
    monomials = (k >= 3) + (k == 4) + (k == 2) + (n - k >= 2)
    return monomials - 1


def _h4_contribution(rank: int) -> int:
    return {1: 0, 2: 1, 3: 1, 4: 2}.get(rank, 1)


def real_oriented_h4_rank(m: int, l: int) -> int:
    """
    Rank of H^4 for 2 <= l <= m-2.

    Args:
        m: Ambient dimension
        l: Plane dimension

    Returns:
        Degree-4 monomials of both tautological bundles modulo the degree-4 relations

    Raises:
        ParameterError: If l is out of range
    """
    if not 2 <= l <= m - 2:
        raise ParameterError(f"need 2 <= l <= m-2, got (m, l) = ({m}, {l})")
    r = m - l
    rank = _h4_contribution(l) + _h4_contribution(r) + (l == r == 2) - 1
    if m == 4:
        rank -= 1
    return rank


class FactSheet(BaseModel):
    model_config = ConfigDict(frozen=True)

    space: SpaceId
    h1_rank: int
    h4_rank: int
    h4_generator_name: Optional[str] = None
    orientable: bool = True
    sphere_equivalent: Optional[Sphere] = None
    companion_orientable: Optional[bool] = None


def _sphere_sheet(space: SpaceId, sphere: Sphere) -> FactSheet:
    return FactSheet(
        space=space,
        h1_rank=int(sphere.d == 1),
        h4_rank=int(sphere.d == 4),
        h4_generator_name="e" if sphere.d == 4 else None,
        sphere_equivalent=sphere,
        companion_orientable=space.k % 2 == 1 if isinstance(space, IsotropicOriented) else None,
    )


def fact_sheet(space: SpaceId) -> FactSheet:
    """
    First and fourth rational Betti numbers together with sphere identifications.

    Args:
        space: Any supported space

    Returns:
        The fact sheet, including the name of the class spanning H^4 when it has rank 1

    Raises:
        ParameterError: For a space type without a fact sheet
    """
    sphere = sphere_equivalent(space)
    if sphere is not None:
        return _sphere_sheet(space, sphere)
    if isinstance(space, IsotropicOriented):
        n, k = space.n, space.k
        companion = k % 2 == 1
        if k == n:
            return FactSheet(space=space, h1_rank=1, h4_rank=0, companion_orientable=companion)
        rank = isotropic_h4_rank(n, k)
        if rank == 0:
            generator = None
        elif n - k >= 2:
            generator = "p1"
        else:
            generator = "e"
        return FactSheet(
            space=space,
            h1_rank=0,
            h4_rank=rank,
            h4_generator_name=generator,
            companion_orientable=companion,
        )
    if isinstance(space, RealOriented):
        rank = real_oriented_h4_rank(space.m, space.l)
        return FactSheet(space=space, h1_rank=0, h4_rank=rank, h4_generator_name="p1")
    if isinstance(space, ComplexGrass):
        box = [p for p in partitions_in_box(space.k, space.n - space.k) if p.size == 2]
        return FactSheet(
            space=space,
            h1_rank=0,
            h4_rank=len(box),
            h4_generator_name="sigma_1^2" if box else None,
        )
    raise ParameterError(f"no fact sheet for {space!r}")
