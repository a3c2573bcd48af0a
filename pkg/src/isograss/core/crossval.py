"""Cross-checks between independently computed answers.

Each check builds rings by brute force and compares them against a second
route: closed-form series, the Schubert oracle, the sieve, or the height
formula. A check returns a :class:`CrossCheckReport` listing every mismatch.
"""

import logging
from typing import Callable, Optional

from isograss.core.errors import IsoGrassError
from isograss.core.idealalg import QuotientRing, complete_intersection_series
from isograss.core.obstruction import (
    Family,
    case_family_check,
    dimension_parity_check,
    enumerate_equal_dim_pairs,
    load_case_families,
    p1_height_formula,
    theorem41_arith_check,
    theorem42_bound_check,
)
from isograss.core.presentations import (
    build_full_isotropic,
    build_quotient_A,
    build_real_oriented_odd,
    exterior_degrees_closed_form,
    fact_sheet,
    isotropic_h4_rank,
    isotropic_poincare_series,
    quotient_degree_data,
    remark_exterior_formula,
    sieve_alphabet,
    survivor_sieve,
)
from isograss.core.reports import CrossCheckReport, VerifyReport
from isograss.core.schubert import betti_and_euler, sigma1_height
from isograss.core.spaces import IsotropicOriented, dimension

logger = logging.getLogger(__name__)

DEFAULT_RING_BOUND = 8
LEMMA_COMPLEX_S = 6
LEMMA_REAL_S = 5


def _pairs(bound: int):
    for n in range(3, bound + 1):
        for k in range(2, n):
            yield n, k


def height_formula_check(bound: int = 7) -> CrossCheckReport:
    """Brute-force height of p1 against [k/2][(n-k)/2]."""
    failures, checked = [], 0
    for n, k in _pairs(bound):
        presentation = build_full_isotropic(n, k)
        p1 = presentation.named_classes()["p1"]
        brute = presentation.quotient.height(p1)
        formula = p1_height_formula(presentation.space)
        checked += 1
        if brute != formula:
            failures.append(f"{presentation.label}: height {brute}, formula {formula}")
    return CrossCheckReport(name="height_formula", checked=checked, failures=failures)


def duality_check(bound: int = 8) -> CrossCheckReport:
    """Poincaré polynomials are palindromic and reach the manifold dimension."""
    failures, checked = [], 0
    for n, k in _pairs(bound):
        try:
            presentation = build_full_isotropic(n, k)
        except IsoGrassError as exc:
            failures.append(f"I:{2 * n},{k}: {exc}")
            continue
        series = presentation.poincare_series()
        dim = dimension(presentation.space)
        checked += 1
        if series.top_degree != dim or not series.is_palindromic(dim):
            failures.append(f"{presentation.label}: {series} is not palindromic about {dim}")
    return CrossCheckReport(name="poincare_duality", checked=checked, failures=failures)


def complete_intersection_check(bound: int = 8) -> CrossCheckReport:
    """Brute-force graded dimensions against the regular-sequence series and the closed forms."""
    failures, checked = [], 0
    for n, k in _pairs(bound):
        presentation = build_full_isotropic(n, k)
        top = presentation.quotient_top_degree()
        brute = presentation.quotient_series()
        relation_degrees = [r.degree for r in presentation.relations]
        series = complete_intersection_series(presentation.alphabet, relation_degrees, top)
        checked += 1
        if series != brute:
            failures.append(f"{presentation.label}: brute {brute}, regular sequence {series}")
        generators, relations = quotient_degree_data(n, k)
        degrees = list(presentation.alphabet.degrees)
        if sorted(relations) != sorted(relation_degrees) or degrees != generators:
            failures.append(f"{presentation.label}: closed-form degree data disagrees")
        if list(presentation.exterior_degrees) != exterior_degrees_closed_form(n, k):
            failures.append(f"{presentation.label}: closed-form survivors disagree")
        if isotropic_poincare_series(n, k) != presentation.poincare_series():
            failures.append(f"{presentation.label}: closed-form Poincaré polynomial disagrees")
    return CrossCheckReport(name="complete_intersection", checked=checked, failures=failures)


def low_degree_check(bound: int = 8) -> CrossCheckReport:
    """Ranks in degrees 1 to 4, and the Lagrangian fact sheets."""
    failures, checked = [], 0
    for n, k in _pairs(bound):
        quotient = build_quotient_A(n, k).quotient
        expected = {1: 0, 2: int(k == 2), 3: 0, 4: isotropic_h4_rank(n, k)}
        found = {d: quotient.graded_dimension(d) for d in expected}
        checked += 1
        if found != expected:
            failures.append(f"A({n},{k}): low degrees {found}, expected {expected}")
    for n in range(2, bound + 1):
        sheet = fact_sheet(IsotropicOriented(n=n, k=n))
        checked += 1
        if (sheet.h1_rank, sheet.h4_rank) != (1, 0):
            failures.append(f"I:{2 * n},{n}: h1 {sheet.h1_rank}, h4 {sheet.h4_rank}")
    return CrossCheckReport(name="low_degrees", checked=checked, failures=failures)


def _graded_dimensions(quotient: QuotientRing, top: int) -> list[int]:
    return [quotient.graded_dimension(d) for d in range(top + 1)]


def lemma_orgr_complex_check(s_max: int = LEMMA_COMPLEX_S) -> CrossCheckReport:
    """A(2s, 2m+1) and A(2s+1, 2m+1) against complex Grassmannians.

    The boxes are m x (s-1-m) and m x (s-m) respectively.
    """
    failures, checked = [], 0
    for s in range(2, s_max + 1):
        for n, width_of in ((2 * s, lambda m: s - 1 - m), (2 * s + 1, lambda m: s - m)):
            for m in range(1, s):
                k = 2 * m + 1
                if k >= n:
                    continue
                width = width_of(m)
                presentation = build_quotient_A(n, k)
                quotient = presentation.quotient
                top = quotient.top_degree()
                oracle = betti_and_euler(m, width).series
                dims = _graded_dimensions(quotient, top)
                mapped = [dims[d] if d % 4 == 0 else 0 for d in range(top + 1)]
                expected = [oracle.coefficient(d // 2) if d % 4 == 0 else 0 for d in range(top + 1)]
                checked += 1
                if dims != mapped or mapped != expected or top != 4 * m * width:
                    failures.append(f"A({n},{k}) vs box {m}x{width}: {dims} != {expected}")
                height = quotient.height(presentation.named_classes()["p1"])
                if height != sigma1_height(m, width) or height != m * width:
                    failures.append(
                        f"A({n},{k}): p1 height {height}, sigma_1 height {sigma1_height(m, width)}"
                    )
    return CrossCheckReport(name="lemma_complex", checked=checked, failures=failures)


def lemma_orgr_real_check(s_max: int = LEMMA_REAL_S) -> CrossCheckReport:
    """A(2s, 2m) and A(2s+1, 2m) against the oriented Grassmannian of 2m-planes in R^{2s+1}."""
    failures, checked = [], 0
    for s in range(2, s_max + 1):
        for n in (2 * s, 2 * s + 1):
            for m in range(1, s + 1):
                k = 2 * m
                if not 2 <= k < n:
                    continue
                a_ring = build_quotient_A(n, k).quotient
                real = build_real_oriented_odd(2 * s + 1, k)
                top = a_ring.top_degree()
                checked += 1
                if real.quotient_top_degree() != top:
                    real_top = real.quotient_top_degree()
                    failures.append(f"A({n},{k}) top {top}, {real.label} top {real_top}")
                    continue
                a_dims = _graded_dimensions(a_ring, top)
                real_dims = _graded_dimensions(real.quotient, top)
                if a_dims != real_dims:
                    failures.append(f"A({n},{k}) {a_dims} != {real.label} {real_dims}")
    return CrossCheckReport(name="lemma_real", checked=checked, failures=failures)


def sieve_remark_check(bound: int = 9) -> CrossCheckReport:
    """Compare the survivor sieve with the arithmetic-progression exterior degrees."""
    failures, notes, checked = [], [], 0
    for n, k in _pairs(bound):
        generators, relations = quotient_degree_data(n, k)
        quotient_top = sum(relations) - sum(generators)
        remark = remark_exterior_formula(n, k)
        sieve = exterior_degrees_closed_form(n, k)
        dim = dimension(IsotropicOriented(n=n, k=k))
        checked += 1
        if quotient_top + sum(remark) != dim:
            if remark != sieve:
                notes.append(
                    f"I:{2 * n},{k}: progression {remark} misses the top degree; sieve {sieve}"
                )
            continue
        if remark != sieve:
            failures.append(f"I:{2 * n},{k}: progression {remark} != sieve {sieve}")
    return CrossCheckReport(
        name="sieve_vs_progression", checked=checked, failures=failures, notes=notes
    )


def definition_agreement_check(bound: int = 8) -> CrossCheckReport:
    """A(n, k) against the quotient by every relation the sieve accepted."""
    failures, checked = [], 0
    for n, k in _pairs(bound):
        a_ring = build_quotient_A(n, k).quotient
        sieve = survivor_sieve(n, k)
        full = QuotientRing.of(sieve_alphabet(n, k), sieve.relations)
        top = a_ring.top_degree()
        checked += 1
        if a_ring.poincare_polynomial(top + 8) != full.poincare_polynomial(top + 8):
            failures.append(f"A({n},{k}) differs from the sieve quotient")
        if any(d < 2 * (n - k) + 1 for d in sieve.exterior):
            failures.append(f"I:{2 * n},{k}: survivor below degree {2 * (n - k) + 1}")
    return CrossCheckReport(name="definition_agreement", checked=checked, failures=failures)


def run_all(
    ring_bound: int = DEFAULT_RING_BOUND, s_max: int = LEMMA_COMPLEX_S
) -> list[CrossCheckReport]:
    """
    Every cross-check at the given brute-force bound.

    Args:
        ring_bound: Largest n for the brute-force ring checks
        s_max: Cap on the lemma parameter s; the complex lemma stops at 6 and the real at 5

    Returns:
        One report per check, in a fixed order
    """
    complex_s = max(2, min(s_max, LEMMA_COMPLEX_S))
    real_s = max(2, min(s_max, LEMMA_REAL_S))
    reports = [
        height_formula_check(ring_bound),
        duality_check(ring_bound),
        complete_intersection_check(ring_bound),
        low_degree_check(ring_bound),
        definition_agreement_check(ring_bound),
        sieve_remark_check(ring_bound + 3),
        lemma_orgr_complex_check(complex_s),
        lemma_orgr_real_check(real_s),
    ]
    for report in reports:
        logger.debug(
            "%s: %d checked, %d failures", report.name, report.checked, len(report.failures)
        )
    return reports


def run_verification(
    bound: int,
    s_max: int,
    ring_bound: int,
    on_stage: Optional[Callable[[str], None]] = None,
) -> VerifyReport:
    """
    Every scan, arithmetic check and cross-check, with the failures collected in order.

    Args:
        bound: Largest n (or m) for the pair enumerations and arithmetic scans
        s_max: Largest parameter for the case families
        ring_bound: Largest n for the brute-force ring checks
        on_stage: Called with a description before each stage starts

    Returns:
        The full report; passed is true only when no failure was collected
    """

    def stage(description: str):
        logger.debug(description)
        if on_stage is not None:
            on_stage(description)

    failures: list[str] = []
    enumerations = []
    for family in Family:
        stage(f"Enumerating {family.value} pairs up to {bound}")
        report = enumerate_equal_dim_pairs(family, bound)
        enumerations.append(report)
        for pair in report.undecided():
            failures.append(
                f"{family.value}: {pair.source} -> {pair.target} (dim {pair.dim}) undecided"
            )

    stage("Checking the equal-height arithmetic")
    theorem41 = theorem41_arith_check(bound)
    for record in theorem41.counterexamples:
        failures.append(
            f"equal heights: {record.source} / {record.target} "
            f"(dim {record.dim}, height {record.height}, gap {record.bound_gap})"
        )
    if not theorem41.identity_holds:
        failures.append("dimension identity (k-l)(k+l+1) = -4 gap failed")

    case_families = []
    for family in load_case_families():
        stage(f"Checking case l = {family.l} up to s = {s_max}")
        report = case_family_check(family, s_max)
        case_families.append(report)
        failures.extend(f"case l = {family.l}: s = {s}" for s in report.failures)

    stage("Checking the isotropic-to-real bound")
    theorem42 = theorem42_bound_check(max(bound, 3))
    if not theorem42.passed:
        failures.append(f"iso-real bound: minimum {theorem42.minimum} at {theorem42.argmin}")

    parity = dimension_parity_check(bound)
    failures.extend(f"dimension parity: {label}" for label in parity.failures)

    stage(f"Cross-checking rings up to n = {ring_bound}")
    cross_checks = run_all(ring_bound, s_max)
    for report in cross_checks:
        failures.extend(f"{report.name}: {failure}" for failure in report.failures)

    return VerifyReport(
        bound=bound,
        s_max=s_max,
        ring_bound=ring_bound,
        enumerations=enumerations,
        theorem41=theorem41,
        case_families=case_families,
        theorem42=theorem42,
        parity=parity,
        cross_checks=cross_checks,
        failures=failures,
        passed=not failures,
    )
