"""Degree verdicts between equal-dimensional manifolds and the arithmetic behind them.

A map of nonzero degree between closed oriented manifolds induces an
injective map on rational cohomology. Every criterion below is a consequence
of that: a class present in the target but absent in the source, or a p1
height that cannot be matched, forces the degree to be zero.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Optional

import yaml
from pydantic import BaseModel, ConfigDict

from isograss.core.errors import DimensionMismatchError, ParameterError
from isograss.core.presentations import (
    FactSheet,
    fact_sheet,
    isotropic_poincare_series,
    quotient_degree_data,
    real_oriented_poincare_series,
)
from isograss.core.reports import (
    CaseFamilyReport,
    CriterionRecord,
    EnumerationReport,
    EqualHeightRecord,
    PairRecord,
    ParityReport,
    Reason,
    Theorem41Report,
    Theorem42Report,
    Verdict,
    VerdictTag,
)
from isograss.core.schubert import betti_and_euler
from isograss.core.series import PoincareSeries
from isograss.core.spaces import (
    ComplexGrass,
    IsotropicOriented,
    RealOriented,
    Sphere,
    SpaceId,
    dimension,
    normalize,
    sort_key,
)

logger = logging.getLogger(__name__)


def isotropic_dimension(n: int, k: int) -> int:
    return 2 * k * (n - k) + k * (k + 1) // 2


def isotropic_height(n: int, k: int) -> int:
    return (k // 2) * ((n - k) // 2)


def p1_height_formula(space: SpaceId) -> int:
    """
    Closed-form height of p1.

    Args:
        space: Isotropic space with 2 <= k < n, or oriented real one with 2 <= l <= m-2

    Returns:
        [k/2][(n-k)/2] for isotropic spaces, [l/2][(m-l)/2] for oriented real ones

    Raises:
        ParameterError: For any other space
    """
    if isinstance(space, IsotropicOriented) and 2 <= space.k < space.n:
        return isotropic_height(space.n, space.k)
    if isinstance(space, RealOriented) and 2 <= space.l <= space.m - 2:
        return (space.l // 2) * ((space.m - space.l) // 2)
    raise ParameterError(f"no p1 height formula for {space.label}")


def _height_or_none(space: SpaceId) -> Optional[int]:
    try:
        return p1_height_formula(space)
    except ParameterError:
        return None


@lru_cache(maxsize=None)
def betti_series(space: SpaceId) -> Optional[PoincareSeries]:
    """Poincaré polynomial when a closed form is available, None otherwise."""
    space = normalize(space)
    if isinstance(space, Sphere):
        return PoincareSeries.one() + PoincareSeries.monomial(space.d)
    if isinstance(space, IsotropicOriented):
        if space.k >= space.n:
            return None
        return isotropic_poincare_series(space.n, space.k)
    if isinstance(space, RealOriented):
        if space.m % 2 == 0:
            return None
        return real_oriented_poincare_series(space.m, space.l)
    if isinstance(space, ComplexGrass):
        return betti_and_euler(space.k, space.n - space.k).series
    return None


def degree_four_height_ceiling(space: SpaceId) -> int:
    """
    Largest height any degree-4 class of a space can have.

    Odd exterior classes never meet in degree 4, so for isotropic spaces the
    bound is the top degree of the even quotient A(n, k) divided by 4.

    Args:
        space: Any space with a dimension

    Returns:
        An upper bound on max{t : x^t != 0} over degree-4 classes x
    """
    if isinstance(space, IsotropicOriented) and 2 <= space.k < space.n:
        generators, relations = quotient_degree_data(space.n, space.k)
        return (sum(relations) - sum(generators)) // 4
    return dimension(space) // 4


def _p1_height_criterion(
    source: SpaceId, target: SpaceId, source_facts: FactSheet
) -> tuple[CriterionRecord, bool]:
    """Compare p1 heights; the flag is set when f*p1 = lambda*p1 with equal heights."""
    name = "p1_height"
    source_height, target_height = _height_or_none(source), _height_or_none(target)
    if target_height is None:
        record = CriterionRecord(
            name=name,
            source_value=source_height,
            target_value=target_height,
            detail="height formula unavailable",
        )
        return record, False
    if target_height == 0:
        record = CriterionRecord(
            name=name,
            source_value=source_height,
            target_value=0,
            detail="target p1 is zero: not applicable",
        )
        return record, False
    if (
        source_height is not None
        and source_facts.h4_rank == 1
        and source_facts.h4_generator_name == "p1"
    ):
        fired = source_height != target_height
        detail = "f*p1 = lambda*p1 needs equal heights" if fired else ""
        record = CriterionRecord(
            name=name,
            source_value=source_height,
            target_value=target_height,
            fired=fired,
            detail=detail,
        )
        return record, not fired
    ceiling = degree_four_height_ceiling(source)
    fired = target_height > ceiling
    if fired:
        detail = f"no degree-4 class of the source reaches height {target_height}"
    else:
        detail = f"H^4 rank {source_facts.h4_rank}: heights up to {ceiling}, not applicable"
    record = CriterionRecord(
        name=name, source_value=ceiling, target_value=target_height, fired=fired, detail=detail
    )
    return record, False


def _case_analysis(source: SpaceId, target: SpaceId) -> CriterionRecord:
    """Re-evaluate the bound the case analysis relies on; it applies only when the bound holds."""
    name = "case_analysis"
    if isinstance(source, IsotropicOriented) and isinstance(target, IsotropicOriented):
        left = source.k * (source.n - source.k)
        right = target.k * (target.n - target.k)
        holds = abs(left - right) <= 4
        detail = f"|k(n-k) - l(m-l)| = {abs(left - right)}"
        detail += " <= 4: no distinct solutions" if holds else " > 4: not applicable"
        return CriterionRecord(
            name=name, source_value=left, target_value=right, fired=holds, detail=detail
        )
    pair = {type(source), type(target)}
    if pair == {IsotropicOriented, RealOriented}:
        iso = source if isinstance(source, IsotropicOriented) else target
        value = iso.k * (iso.n - iso.k) + iso.k * (iso.k + 1) // 2
        holds = value <= 4
        detail = f"k(n-k) + k(k+1)/2 = {value}"
        detail += " <= 4" if holds else " > 4: not applicable"
        return CriterionRecord(
            name=name, source_value=value, target_value=4, fired=holds, detail=detail
        )
    return CriterionRecord(name=name, detail="no case analysis for this pair of families")


def verdict(source: SpaceId, target: SpaceId) -> Verdict:
    """
    Decide whether a map from ``source`` to ``target`` must have degree zero.

    Criteria run in a fixed order and the first that fires decides: sphere
    target, identical spaces, H^1, H^4, p1 height, case analysis, Betti numbers.

    Args:
        source: Domain of the map
        target: Codomain of the map

    Returns:
        The verdict with every evaluated criterion in its trace

    Raises:
        DimensionMismatchError: If the two dimensions differ
    """
    source_dim, target_dim = dimension(source), dimension(target)
    if source_dim != target_dim:
        raise DimensionMismatchError(source_dim, target_dim)
    source, target = normalize(source), normalize(target)
    trace: list[CriterionRecord] = []

    def decide(tag: VerdictTag, reason: Reason) -> Verdict:
        logger.debug("verdict %s -> %s: %s %s", source.label, target.label, tag.value, reason.value)
        return Verdict(tag=tag, reason=reason, trace=trace)

    is_sphere = isinstance(target, Sphere)
    trace.append(
        CriterionRecord(
            name="sphere_target",
            source_value=source.label,
            target_value=target.label,
            fired=is_sphere,
            detail="maps of every degree exist onto a sphere" if is_sphere else "",
        )
    )
    if is_sphere:
        return decide(VerdictTag.ANY_DEGREE_POSSIBLE, Reason.SPHERE_TARGET)

    identical = source == target
    trace.append(
        CriterionRecord(
            name="identical_spaces",
            source_value=source.label,
            target_value=target.label,
            fired=identical,
        )
    )
    if identical:
        return decide(VerdictTag.NO_OBSTRUCTION_DETECTED, Reason.IDENTICAL_SPACES)

    source_facts, target_facts = fact_sheet(source), fact_sheet(target)
    h1_fired = target_facts.h1_rank > source_facts.h1_rank
    trace.append(
        CriterionRecord(
            name="h1",
            source_value=source_facts.h1_rank,
            target_value=target_facts.h1_rank,
            fired=h1_fired,
            detail="target has H^1 the source lacks" if h1_fired else "",
        )
    )
    if h1_fired:
        return decide(VerdictTag.FORCED_ZERO, Reason.H1_MISMATCH)

    h4_fired = target_facts.h4_rank > 0 and source_facts.h4_rank == 0
    trace.append(
        CriterionRecord(
            name="h4",
            source_value=source_facts.h4_rank,
            target_value=target_facts.h4_rank,
            fired=h4_fired,
            detail="target has H^4 while the source has none" if h4_fired else "",
        )
    )
    if h4_fired:
        return decide(VerdictTag.FORCED_ZERO, Reason.H4_MISMATCH)

    height, matched = _p1_height_criterion(source, target, source_facts)
    trace.append(height)
    if height.fired:
        return decide(VerdictTag.FORCED_ZERO, Reason.HEIGHT_MISMATCH)
    if matched:
        case = _case_analysis(source, target)
    else:
        case = CriterionRecord(
            name="case_analysis", detail="needs f*p1 = lambda*p1 with equal heights"
        )
    trace.append(case)
    if case.fired:
        return decide(VerdictTag.FORCED_ZERO, Reason.CASE_ANALYSIS)

    source_betti, target_betti = betti_series(source), betti_series(target)
    if source_betti is None or target_betti is None:
        trace.append(CriterionRecord(name="betti", detail="Betti numbers unavailable"))
    else:
        degree = target_betti.first_excess_over(source_betti)
        if degree is None:
            record = CriterionRecord(name="betti", detail="b_i(target) <= b_i(source) for all i")
            trace.append(record)
        else:
            trace.append(
                CriterionRecord(
                    name="betti",
                    source_value=source_betti.coefficient(degree),
                    target_value=target_betti.coefficient(degree),
                    fired=True,
                    detail=f"degree {degree}",
                )
            )
            return decide(VerdictTag.FORCED_ZERO, Reason.BETTI_MISMATCH)

    return decide(VerdictTag.NO_OBSTRUCTION_DETECTED, Reason.NO_CRITERION_APPLIES)


class Family(str, Enum):
    ISO_ISO = "iso-iso"
    ISO_REAL = "iso-real"
    REAL_ISO = "real-iso"


def isotropic_spaces(bound: int) -> list[IsotropicOriented]:
    """Isotropic spaces with 2 <= k <= n <= bound."""
    return [IsotropicOriented(n=n, k=k) for n in range(2, bound + 1) for k in range(2, n + 1)]


def real_spaces(bound: int) -> list[RealOriented]:
    """Oriented real Grassmannians with 2 <= l <= m-2, m <= bound."""
    return [RealOriented(m=m, l=l) for m in range(4, bound + 1) for l in range(2, m - 1)]


def _by_dimension(spaces: Iterable[SpaceId]) -> dict[int, list[SpaceId]]:
    groups: dict[int, list[SpaceId]] = defaultdict(list)
    for space in spaces:
        groups[dimension(space)].append(space)
    return groups


def enumerate_equal_dim_pairs(family: Family, bound: int) -> EnumerationReport:
    """
    Every ordered pair of distinct equal-dimensional spaces in a family, with its verdict.

    Args:
        family: Which families the source and target come from
        bound: Largest n (isotropic) or m (real) scanned

    Returns:
        Pairs sorted by dimension, then source, then target, with tag and reason counts

    Raises:
        ParameterError: If bound < 3
    """
    if bound < 3:
        raise ParameterError(f"scan bound must be at least 3, got {bound}")
    family = Family(family)
    isotropic = _by_dimension(isotropic_spaces(bound))
    real = _by_dimension(real_spaces(bound))
    sources, targets = {
        Family.ISO_ISO: (isotropic, isotropic),
        Family.ISO_REAL: (isotropic, real),
        Family.REAL_ISO: (real, isotropic),
    }[family]
    candidates = []
    for dim, group in sources.items():
        for source in group:
            for target in targets.get(dim, ()):
                if source != target:
                    candidates.append((dim, source, target))
    candidates.sort(key=lambda item: (item[0], sort_key(item[1]), sort_key(item[2])))
    pairs = []
    for dim, source, target in candidates:
        result = verdict(source, target)
        pairs.append(
            PairRecord(
                source=source.label,
                target=target.label,
                dim=dim,
                verdict=result.tag,
                reason=result.reason,
                reason_trace=result.trace,
            )
        )
    summary = Counter(p.verdict.value for p in pairs)
    summary.update(p.reason.value for p in pairs)
    logger.debug("%s up to %d: %d pairs", family.value, bound, len(pairs))
    return EnumerationReport(
        family=family.value, bound=bound, pairs=pairs, summary=dict(sorted(summary.items()))
    )


def small_difference_solutions(limit: int = 16) -> list[tuple[int, int]]:
    """(k, l) with k > l >= 2, 4 | (k-l)(k+l+1) and (k-l)(k+l+1) <= limit."""
    found = []
    for l in range(2, limit + 1):
        for k in range(l + 1, l + limit + 1):
            product = (k - l) * (k + l + 1)
            if product <= limit and product % 4 == 0:
                found.append((k, l))
    return found


def theorem41_arith_check(bound: int) -> Theorem41Report:
    """
    Re-run the arithmetic of the isotropic rigidity argument over 2 <= k < n <= bound.

    Args:
        bound: Largest n scanned

    Returns:
        The report, listing equal-dimension pairs whose p1 heights agree

    Raises:
        ParameterError: If bound < 3
    """
    if bound < 3:
        raise ParameterError(f"scan bound must be at least 3, got {bound}")
    spaces = [s for s in isotropic_spaces(bound) if s.k < s.n]
    groups = _by_dimension(spaces)
    scanned = 0
    identity_holds = True
    equal_heights = []
    for dim, group in sorted(groups.items()):
        group = sorted(group, key=sort_key)
        for i, first in enumerate(group):
            for second in group[i + 1 :]:
                scanned += 1
                (n, k), (m, l) = first.params, second.params
                gap = k * (n - k) - l * (m - l)
                product = (k - l) * (k + l + 1)
                if product != -4 * gap:
                    identity_holds = False
                height = isotropic_height(n, k)
                if height != isotropic_height(m, l):
                    continue
                equal_heights.append(
                    EqualHeightRecord(
                        source=first.label,
                        target=second.label,
                        dim=dim,
                        height=height,
                        bound_gap=gap,
                        product=product,
                        divisible_by_four=product % 4 == 0,
                        bound_holds=abs(gap) <= 4 and abs(product) <= 16,
                    )
                )
    k_plus_two = all((2 * (2 * l + 3)) % 4 != 0 for l in range(2, bound + 1))
    k_plus_one_even = all((2 * l + 2) % 4 != 0 for l in range(2, bound + 1, 2))
    passed = not equal_heights and identity_holds and k_plus_two and k_plus_one_even
    return Theorem41Report(
        bound=bound,
        pairs_scanned=scanned,
        equal_height_pairs=equal_heights,
        counterexamples=list(equal_heights),
        identity_holds=identity_holds,
        small_difference_solutions=small_difference_solutions(),
        k_plus_two_rejected=k_plus_two,
        k_plus_one_even_rejected=k_plus_one_even,
        passed=passed,
    )


class AffineTerm(BaseModel):
    model_config = ConfigDict(frozen=True)

    slope: int
    offset: int

    def at(self, s: int) -> int:
        return self.slope * s + self.offset


class FloorTerm(BaseModel):
    """coefficient * floor((slope*s + offset) / divisor)."""

    model_config = ConfigDict(frozen=True)

    side: str
    coefficient: int
    slope: int
    offset: int
    divisor: int = 1

    def at(self, s: int) -> int:
        return self.coefficient * ((self.slope * s + self.offset) // self.divisor)


class CaseFamily(BaseModel):
    model_config = ConfigDict(frozen=True)

    l: int
    k: int
    m: AffineTerm
    n: AffineTerm
    lhs: FloorTerm
    rhs: FloorTerm

    def spaces(self, s: int) -> tuple[int, int]:
        """(n, m) for parameter s."""
        return self.n.at(s), self.m.at(s)

    def side_height(self, side: str, s: int) -> int:
        n, m = self.spaces(s)
        return isotropic_height(n, self.k) if side == "kn" else isotropic_height(m, self.l)


def get_case_families_path() -> Path:
    return Path(__file__).parent.parent / "templates" / "case_families.yaml"


def load_case_families(path: Optional[Path] = None) -> list[CaseFamily]:
    """Parametrized case families from the bundled YAML, or from ``path``."""
    data = yaml.safe_load((path or get_case_families_path()).read_text())
    return [CaseFamily.model_validate(entry) for entry in data["families"]]


def case_family_check(family: CaseFamily, s_max: int) -> CaseFamilyReport:
    """
    Check the parametrized case for s = 1..s_max.

    Args:
        family: The family loaded from YAML
        s_max: Largest parameter checked

    Returns:
        Whether the dimension identity, the height formula and solution coverage hold

    Raises:
        ParameterError: If s_max < 1
    """
    if s_max < 1:
        raise ParameterError(f"s_max must be positive, got {s_max}")
    failures = []
    identity = heights = True
    lhs_greater = 0
    for s in range(1, s_max + 1):
        n, m = family.spaces(s)
        if isotropic_dimension(n, family.k) != isotropic_dimension(m, family.l):
            identity = False
            failures.append(s)
            continue
        lhs, rhs = family.lhs.at(s), family.rhs.at(s)
        if lhs != family.side_height(family.lhs.side, s) or rhs != family.side_height(
            family.rhs.side, s
        ):
            heights = False
            failures.append(s)
        elif lhs == rhs:
            failures.append(s)
        lhs_greater += lhs > rhs

    # every (n, m) with n > k, m > l and equal dimension must be some s
    covered = True
    for m in range(family.l + 1, family.m.at(s_max) + 1):
        excess = isotropic_dimension(m, family.l) - family.k * (family.k + 1) // 2
        if excess <= 0 or excess % (2 * family.k):
            continue
        n = family.k + excess // (2 * family.k)
        s, remainder = divmod(m - family.m.offset, family.m.slope)
        if remainder or s < 1 or family.n.at(s) != n:
            covered = False
            failures.append(-m)

    return CaseFamilyReport(
        l=family.l,
        k=family.k,
        s_max=s_max,
        first_values=(family.lhs.at(1), family.rhs.at(1)),
        lhs_greater=lhs_greater,
        dimension_identity_holds=identity,
        heights_match_formula=heights,
        covers_all_solutions=covered,
        failures=failures,
        passed=not failures,
    )


def theorem42_bound_check(bound: int) -> Theorem42Report:
    """k(n-k) + k(k+1)/2 over 2 <= k < n <= bound: minimum, and monotone growth in n."""
    if bound < 3:
        raise ParameterError(f"scan bound must be at least 3, got {bound}")
    values = {
        (n, k): k * (n - k) + k * (k + 1) // 2
        for n in range(3, bound + 1)
        for k in range(2, n)
    }
    argmin = min(values, key=lambda key: (values[key], key))
    monotone = all(
        values[(n + 1, k)] > values[(n, k)] for (n, k) in values if (n + 1, k) in values
    )
    above = all(v > 4 for v in values.values())
    return Theorem42Report(
        bound=bound,
        minimum=values[argmin],
        argmin=argmin,
        all_above_four=above,
        monotone_in_n=monotone,
        passed=above and monotone,
    )


def dimension_parity_check(bound: int) -> ParityReport:
    """The isotropic dimension is odd exactly when k is 1 or 2 mod 4."""
    failures = []
    checked = 0
    for n in range(1, bound + 1):
        for k in range(1, n + 1):
            checked += 1
            odd = isotropic_dimension(n, k) % 2 == 1
            if odd != (k % 4 in (1, 2)):
                failures.append(IsotropicOriented(n=n, k=k).label)
    return ParityReport(bound=bound, checked=checked, failures=failures, passed=not failures)
