import pytest

from isograss.core.errors import DimensionMismatchError, ParameterError
from isograss.core.obstruction import (
    Family,
    betti_series,
    case_family_check,
    degree_four_height_ceiling,
    dimension_parity_check,
    enumerate_equal_dim_pairs,
    isotropic_dimension,
    isotropic_height,
    load_case_families,
    p1_height_formula,
    small_difference_solutions,
    theorem41_arith_check,
    theorem42_bound_check,
    verdict,
)
from isograss.core.presentations import build_quotient_A, fact_sheet
from isograss.core.reports import Reason, VerdictTag
from isograss.core.spaces import IsotropicOriented, dimension, normalize, parse_space


def decide(source: str, target: str):
    return verdict(parse_space(source), parse_space(target))


def criterion(result, name: str):
    return next(record for record in result.trace if record.name == name)


def deciding_criterion_holds(reason, record, source, target) -> bool:
    """Recompute the criterion that decided a ForcedZero verdict from first principles."""
    source, target = normalize(source), normalize(target)
    source_facts, target_facts = fact_sheet(source), fact_sheet(target)
    if reason is Reason.H1_MISMATCH:
        return target_facts.h1_rank > source_facts.h1_rank
    if reason is Reason.H4_MISMATCH:
        return target_facts.h4_rank > 0 and source_facts.h4_rank == 0
    if reason is Reason.HEIGHT_MISMATCH:
        target_height = p1_height_formula(target)
        if target_height == 0:
            return False
        if source_facts.h4_rank == 1 and source_facts.h4_generator_name == "p1":
            return p1_height_formula(source) != target_height
        return target_height > degree_four_height_ceiling(source)
    if reason is Reason.CASE_ANALYSIS:
        if p1_height_formula(source) != p1_height_formula(target):
            return False
        if isinstance(source, IsotropicOriented) and isinstance(target, IsotropicOriented):
            gap = source.k * (source.n - source.k) - target.k * (target.n - target.k)
            return abs(gap) <= 4
        iso = source if isinstance(source, IsotropicOriented) else target
        return iso.k * (iso.n - iso.k) + iso.k * (iso.k + 1) // 2 <= 4
    if reason is Reason.BETTI_MISMATCH:
        degree = int(record.detail.removeprefix("degree "))
        return betti_series(target).coefficient(degree) > betti_series(source).coefficient(degree)
    return False


class TestVerdict:
    @pytest.mark.parametrize(
        "source, target, tag, reason",
        [
            ("I:8,1", "RG:8,7", VerdictTag.ANY_DEGREE_POSSIBLE, Reason.SPHERE_TARGET),
            ("I:8,2", "I:8,2", VerdictTag.NO_OBSTRUCTION_DETECTED, Reason.IDENTICAL_SPACES),
            ("I:10,2", "I:10,5", VerdictTag.FORCED_ZERO, Reason.H1_MISMATCH),
            ("I:10,5", "I:10,2", VerdictTag.FORCED_ZERO, Reason.H4_MISMATCH),
            ("I:10,3", "I:10,4", VerdictTag.NO_OBSTRUCTION_DETECTED, Reason.NO_CRITERION_APPLIES),
            ("I:10,4", "I:10,3", VerdictTag.NO_OBSTRUCTION_DETECTED, Reason.NO_CRITERION_APPLIES),
            ("I:16,4", "I:16,7", VerdictTag.FORCED_ZERO, Reason.BETTI_MISMATCH),
            ("I:16,7", "I:16,4", VerdictTag.FORCED_ZERO, Reason.H4_MISMATCH),
            ("I:16,4", "I:18,3", VerdictTag.NO_OBSTRUCTION_DETECTED, Reason.NO_CRITERION_APPLIES),
            ("I:18,3", "I:16,4", VerdictTag.FORCED_ZERO, Reason.HEIGHT_MISMATCH),
            ("I:10,2", "RG:8,3", VerdictTag.FORCED_ZERO, Reason.HEIGHT_MISMATCH),
            ("I:32,3", "I:22,7", VerdictTag.FORCED_ZERO, Reason.BETTI_MISMATCH),
            ("I:50,5", "I:36,10", VerdictTag.FORCED_ZERO, Reason.BETTI_MISMATCH),
            ("I:36,10", "I:50,5", VerdictTag.NO_OBSTRUCTION_DETECTED, Reason.NO_CRITERION_APPLIES),
        ],
    )
    def test_verdicts(self, source, target, tag, reason):
        result = decide(source, target)
        assert (result.tag, result.reason) == (tag, reason)

    def test_height_values_in_trace(self):
        record = criterion(decide("I:10,2", "RG:8,3"), "p1_height")
        assert (record.source_value, record.target_value, record.fired) == (1, 2, True)
        record = criterion(decide("I:18,3", "I:16,4"), "p1_height")
        assert (record.source_value, record.target_value, record.fired) == (3, 4, True)

    def test_zero_target_height_is_not_applicable(self):
        result = decide("I:10,3", "I:10,4")
        record = criterion(result, "p1_height")
        assert (record.source_value, record.target_value, record.fired) == (1, 0, False)
        assert "not applicable" in record.detail
        assert not criterion(result, "case_analysis").fired
        assert result.describe() == "NoObstructionDetected NoCriterionApplies"

    def test_rank_two_source_falls_through_to_betti(self):
        result = decide("I:16,4", "I:16,7")
        assert not criterion(result, "p1_height").fired
        assert not criterion(result, "case_analysis").fired
        betti = criterion(result, "betti")
        assert (betti.source_value, betti.target_value, betti.detail) == (0, 1, "degree 5")
        assert result.describe() == "ForcedZero BettiMismatch(0, 1)"

    def test_rank_two_source_uses_height_ceiling(self):
        result = decide("I:16,4", "I:18,3")
        record = criterion(result, "p1_height")
        assert (record.source_value, record.target_value, record.fired) == (5, 3, False)
        assert record.detail.startswith("H^4 rank 2")
        assert criterion(result, "case_analysis").source_value is None
        assert not criterion(result, "betti").fired

    def test_criteria_run_in_order(self):
        result = decide("I:32,3", "I:22,7")
        assert [r.name for r in result.trace] == [
            "sphere_target",
            "identical_spaces",
            "h1",
            "h4",
            "p1_height",
            "case_analysis",
            "betti",
        ]
        case = criterion(result, "case_analysis")
        assert (case.source_value, case.target_value, case.fired) == (39, 28, False)
        assert criterion(result, "betti").fired

    def test_sphere_target_stops_early(self):
        result = decide("I:8,1", "RG:8,7")
        assert [r.name for r in result.trace] == ["sphere_target"]

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError) as info:
            decide("I:8,2", "I:10,3")
        assert (info.value.source_dim, info.value.target_dim) == (11, 18)


class TestHeightsAndBetti:
    @pytest.mark.parametrize(
        "text, expected", [("I:8,2", 1), ("I:10,4", 0), ("I:16,4", 4), ("RG:7,3", 2)]
    )
    def test_p1_height_formula(self, text, expected):
        assert p1_height_formula(parse_space(text)) == expected

    @pytest.mark.parametrize(
        "text, expected", [("I:16,4", 5), ("I:12,4", 3), ("I:10,4", 1), ("RG:7,3", 3)]
    )
    def test_degree_four_height_ceiling(self, text, expected):
        assert degree_four_height_ceiling(parse_space(text)) == expected

    @pytest.mark.parametrize("n, ceiling", [(6, 3), (8, 5)])
    def test_euler_class_reaches_ceiling(self, n, ceiling):
        presentation = build_quotient_A(n, 4)
        e = presentation.alphabet.generator("e")
        assert presentation.quotient.height(e) == ceiling
        assert degree_four_height_ceiling(IsotropicOriented(n=n, k=4)) == ceiling

    def test_ceiling_bounds_p1_height(self):
        for n in range(3, 13):
            for k in range(2, n):
                ceiling = degree_four_height_ceiling(IsotropicOriented(n=n, k=k))
                assert isotropic_height(n, k) <= ceiling <= isotropic_dimension(n, k) // 4

    @pytest.mark.parametrize("text", ["I:8,4", "RG:5,1", "S:4"])
    def test_no_formula(self, text):
        with pytest.raises(ParameterError):
            p1_height_formula(parse_space(text))

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("S:3", "1 + x^3"),
            ("I:8,1", "1 + x^7"),
            ("I:8,3", "1 + x^5 + x^7 + x^12"),
            ("CG:4,2", "1 + x^2 + 2*x^4 + x^6 + x^8"),
        ],
    )
    def test_betti_series(self, text, expected):
        assert str(betti_series(parse_space(text))) == expected

    @pytest.mark.parametrize("text", ["I:8,4", "RG:6,2"])
    def test_betti_unavailable(self, text):
        assert betti_series(parse_space(text)) is None


class TestEnumeration:
    def test_small_bound_leaves_only_matching_rings_open(self):
        report = enumerate_equal_dim_pairs(Family.ISO_ISO, 12)
        assert report.pairs
        assert all(p.source != p.target for p in report.pairs)
        undecided = {(p.source, p.target) for p in report.undecided()}
        assert {("I:10,3", "I:10,4"), ("I:10,4", "I:10,3")} <= undecided
        assert report.summary[VerdictTag.FORCED_ZERO.value] == len(report.pairs) - len(undecided)

    @pytest.mark.parametrize("family", [Family.ISO_REAL, Family.REAL_ISO])
    def test_pairs_share_dimension(self, family):
        report = enumerate_equal_dim_pairs(family, 40)
        assert report.pairs
        for pair in report.pairs:
            assert dimension(parse_space(pair.source)) == pair.dim
            assert dimension(parse_space(pair.target)) == pair.dim
            iso = pair.source if family is Family.ISO_REAL else pair.target
            assert iso.startswith("I:")

    @pytest.mark.slow
    def test_forced_zero_traces_recompute(self):
        for family in Family:
            for pair in enumerate_equal_dim_pairs(family, 40).pairs:
                fired = [record for record in pair.reason_trace if record.fired]
                if pair.verdict is not VerdictTag.FORCED_ZERO:
                    assert fired == []
                    continue
                assert fired == [pair.reason_trace[-1]]
                source, target = parse_space(pair.source), parse_space(pair.target)
                assert deciding_criterion_holds(pair.reason, fired[0], source, target)

    @pytest.mark.slow
    def test_swapped_pairs_stay_open_only_for_matching_betti_numbers(self):
        report = enumerate_equal_dim_pairs(Family.ISO_ISO, 40)
        tags = {(p.source, p.target): p.verdict for p in report.pairs}
        both_open = []
        for (source, target), tag in tags.items():
            if tag is VerdictTag.NO_OBSTRUCTION_DETECTED and tags[(target, source)] is tag:
                both_open.append((source, target))
                assert betti_series(parse_space(source)) == betti_series(parse_space(target))
        assert ("I:10,3", "I:10,4") in both_open

    def test_family_accepts_strings(self):
        assert enumerate_equal_dim_pairs("real-iso", 6).family == "real-iso"

    def test_bound_too_small(self):
        with pytest.raises(ParameterError):
            enumerate_equal_dim_pairs(Family.ISO_ISO, 2)


class TestArithmetic:
    def test_small_difference_solutions(self):
        assert small_difference_solutions() == [(4, 3), (6, 5), (8, 7)]

    def test_theorem41_clean_range(self):
        report = theorem41_arith_check(15)
        assert report.passed
        assert report.identity_holds
        assert report.pairs_scanned > 0
        assert report.k_plus_two_rejected and report.k_plus_one_even_rejected

    def test_theorem41_reports_equal_heights(self):
        report = theorem41_arith_check(20)
        assert not report.passed
        assert report.identity_holds
        found = {(r.source, r.target) for r in report.counterexamples}
        assert found == {("I:22,7", "I:32,3")}
        record = report.counterexamples[0]
        assert (record.dim, record.height) == (84, 6)
        assert not record.bound_holds

    def test_theorem42(self):
        report = theorem42_bound_check(40)
        assert (report.minimum, report.argmin) == (5, (3, 2))
        assert report.all_above_four and report.monotone_in_n
        assert report.passed

    def test_parity(self):
        report = dimension_parity_check(20)
        assert report.passed
        assert report.checked == 210

    @pytest.mark.parametrize("check", [theorem41_arith_check, theorem42_bound_check])
    def test_bound_validation(self, check):
        with pytest.raises(ParameterError):
            check(2)


class TestCaseFamilies:
    def test_families_load(self):
        families = load_case_families()
        assert [(f.l, f.k) for f in families] == [(3, 4), (5, 6), (7, 8)]

    @pytest.mark.parametrize("index, first", [(0, (1, 0)), (1, (3, 2)), (2, (4, 6))])
    def test_families_hold(self, index, first):
        family = load_case_families()[index]
        report = case_family_check(family, 50)
        assert report.first_values == first
        assert report.dimension_identity_holds
        assert report.heights_match_formula
        assert report.covers_all_solutions
        assert report.passed

    def test_s_max_must_be_positive(self):
        with pytest.raises(ParameterError):
            case_family_check(load_case_families()[0], 0)
