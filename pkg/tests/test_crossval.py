import pytest

from isograss.core.crossval import (
    complete_intersection_check,
    definition_agreement_check,
    duality_check,
    height_formula_check,
    lemma_orgr_complex_check,
    lemma_orgr_real_check,
    low_degree_check,
    run_all,
    run_verification,
    sieve_remark_check,
)


@pytest.mark.parametrize(
    "check, bound",
    [
        (height_formula_check, 8),
        (duality_check, 8),
        (complete_intersection_check, 8),
        (low_degree_check, 8),
        (definition_agreement_check, 8),
        (lemma_orgr_complex_check, 6),
        (lemma_orgr_real_check, 5),
    ],
)
def test_cross_checks_agree(check, bound):
    report = check(bound)
    assert report.checked > 0
    assert report.failures == []


def test_sieve_remark_notes_disagreement():
    report = sieve_remark_check(11)
    assert report.failures == []
    assert any(note.startswith("I:10,3") for note in report.notes)


def test_run_all_names():
    names = [report.name for report in run_all(ring_bound=5, s_max=3)]
    assert names == [
        "height_formula",
        "poincare_duality",
        "complete_intersection",
        "low_degrees",
        "definition_agreement",
        "sieve_vs_progression",
        "lemma_complex",
        "lemma_real",
    ]


def test_run_all_defaults_reach_lemma_ranges():
    reports = {report.name: report for report in run_all()}
    complex_default = lemma_orgr_complex_check()
    real_default = lemma_orgr_real_check()
    assert reports["lemma_complex"].checked == complex_default.checked
    assert reports["lemma_real"].checked == real_default.checked
    assert complex_default.checked > lemma_orgr_complex_check(5).checked
    assert real_default.checked > lemma_orgr_real_check(4).checked


@pytest.mark.slow
def test_verification_passes_at_small_bound():
    stages = []
    report = run_verification(4, 50, 8, on_stage=stages.append)
    assert report.passed, report.failures
    assert report.theorem41.passed
    assert [e.family for e in report.enumerations] == ["iso-iso", "iso-real", "real-iso"]
    assert stages[0] == "Enumerating iso-iso pairs up to 4"


@pytest.mark.slow
def test_verification_lists_matching_rings_as_undecided():
    report = run_verification(12, 50, 5)
    assert not report.passed
    assert "iso-iso: I:10,3 -> I:10,4 (dim 18) undecided" in report.failures
    assert "iso-iso: I:10,4 -> I:10,3 (dim 18) undecided" in report.failures
    assert report.theorem41.passed


@pytest.mark.slow
def test_verification_reports_equal_heights():
    report = run_verification(20, 20, 4)
    assert not report.passed
    assert any("I:22,7 / I:32,3" in failure for failure in report.failures)
