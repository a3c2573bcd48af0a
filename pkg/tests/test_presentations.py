import pytest

from isograss.core.errors import ParameterError, TopDegreeMismatch, UnsupportedSpaceError
from isograss.core.polyring import GeneratorAlphabet
from isograss.core.presentations import (
    Presentation,
    SieveOutcome,
    a_alphabet,
    build_full_isotropic,
    build_presentation,
    build_quotient_A,
    build_real_oriented_odd,
    build_sphere,
    differential,
    exterior_degrees_closed_form,
    fact_sheet,
    isotropic_h4_rank,
    isotropic_poincare_series,
    pontryagin_class,
    quotient_degree_data,
    real_oriented_h4_rank,
    real_oriented_poincare_series,
    remark_exterior_formula,
    sieve_alphabet,
    survivor_sieve,
)
from isograss.core.spaces import ComplexGrass, IsotropicOriented, parse_space


class TestAlphabets:
    @pytest.mark.parametrize(
        "n, k, names",
        [
            (4, 2, ("c2", "e")),
            (5, 2, ("c2", "e")),
            (7, 3, ("c2", "c4", "p1")),
            (6, 4, ("c2", "p1", "e")),
            (4, 3, ("p1",)),
        ],
    )
    def test_a_alphabet(self, n, k, names):
        assert a_alphabet(n, k).names == names

    def test_sieve_alphabet_has_every_chern_class(self):
        assert sieve_alphabet(5, 3).names == ("c1", "c2", "p1")
        assert sieve_alphabet(5, 3).degrees == (2, 4, 4)

    def test_out_of_range(self):
        with pytest.raises(ParameterError):
            a_alphabet(4, 1)
        with pytest.raises(ParameterError):
            a_alphabet(4, 4)


class TestDifferential:
    def test_images(self):
        assert str(differential(1, 5, 3)) == "c1"
        assert str(differential(2, 5, 3)) == "c2 + p1"
        assert differential(5, 5, 3).is_zero
        assert str(differential(4, 4, 2, a_alphabet(4, 2))) == "c2*e^2"

    def test_index_range(self):
        with pytest.raises(ParameterError):
            differential(0, 5, 3)
        with pytest.raises(ParameterError):
            differential(6, 5, 3)

    def test_top_pontryagin_class_is_euler_square(self):
        alphabet = a_alphabet(4, 2)
        e = alphabet.generator("e")
        assert pontryagin_class(alphabet, 1, 2) == e**2
        assert pontryagin_class(alphabet, 2, 2).is_zero
        assert pontryagin_class(alphabet, 0, 2) == 1


class TestSieve:
    def test_trace(self):
        result = survivor_sieve(5, 3)
        assert [step.outcome for step in result.trace.steps] == [
            SieveOutcome.CONSUMED_ELIMINATOR,
            SieveOutcome.RELATION,
            SieveOutcome.SURVIVOR,
            SieveOutcome.RELATION,
            SieveOutcome.SURVIVOR,
        ]
        assert [str(r) for r in result.relations] == ["c1", "c2 + p1", "c2*p1"]
        assert result.exterior == [5, 9]
        assert result.trace.steps[2].survivor_degree == 5
        assert result.trace.steps[1].survivor_degree is None

    @pytest.mark.parametrize("n", range(3, 9))
    def test_closed_form_matches_sieve(self, n):
        for k in range(2, n):
            assert survivor_sieve(n, k).exterior == exterior_degrees_closed_form(n, k)

    def test_closed_forms(self):
        assert exterior_degrees_closed_form(4, 3) == [5, 7]
        assert exterior_degrees_closed_form(4, 2) == [5]
        assert quotient_degree_data(4, 3) == ([4], [4])
        assert quotient_degree_data(5, 3) == ([4, 4], [4, 8])

    def test_progression_formula(self):
        assert remark_exterior_formula(4, 2) == [5]
        assert remark_exterior_formula(5, 3) == [5, 7, 9]


class TestQuotientA:
    def test_a42(self):
        presentation = build_quotient_A(4, 2)
        assert presentation.label == "A(4,2)"
        assert [str(r) for r in presentation.relations] == ["c2 + e^2", "c2*e^2"]
        assert presentation.quotient_top_degree() == 6
        assert str(presentation.named_classes()["p1"]) == "e^2"

    def test_a53(self):
        presentation = build_quotient_A(5, 3)
        assert [str(r) for r in presentation.relations] == ["c2 + p1", "c2*p1"]
        assert presentation.quotient_top_degree() == 4

    def test_a43_is_rational_numbers(self):
        presentation = build_quotient_A(4, 3)
        assert [str(r) for r in presentation.relations] == ["p1"]
        assert presentation.quotient_top_degree() == 0

    def test_a52_is_truncated_polynomial_ring(self):
        quotient = build_quotient_A(5, 2).quotient
        assert [quotient.graded_dimension(d) for d in range(0, 10, 2)] == [1, 1, 1, 1, 0]

    def test_truncated_classes_are_zero(self):
        named = build_quotient_A(5, 4).named_classes()
        assert str(named["p2"]) == "e^2"
        assert named["c1"].is_zero


class TestFullIsotropic:
    def test_i82(self):
        presentation = build_full_isotropic(4, 2)
        assert presentation.exterior_degrees == (5,)
        assert presentation.top_degree() == 11
        expected = "1 + x^2 + x^4 + x^5 + x^6 + x^7 + x^9 + x^11"
        assert str(presentation.poincare_series()) == expected

    def test_i103(self):
        presentation = build_full_isotropic(5, 3)
        assert presentation.label == "I:10,3"
        assert presentation.exterior_degrees == (5, 9)
        assert presentation.top_degree() == 18
        assert presentation.trace is not None

    def test_i83(self):
        assert str(build_full_isotropic(4, 3).poincare_series()) == "1 + x^5 + x^7 + x^12"

    @pytest.mark.parametrize("n, k", [(4, 2), (5, 3), (5, 4), (6, 3), (6, 4)])
    def test_closed_form_series(self, n, k):
        presentation = build_full_isotropic(n, k)
        series = presentation.poincare_series()
        assert series == isotropic_poincare_series(n, k)
        assert series.is_palindromic(presentation.top_degree())

    def test_top_degree_mismatch(self):
        alphabet = GeneratorAlphabet.of(("e", 2))
        e = alphabet.generator("e")
        presentation = Presentation(alphabet, (e**4,), "wrong", space=IsotropicOriented(n=4, k=2))
        with pytest.raises(TopDegreeMismatch) as info:
            presentation.validate_top_degree()
        assert (info.value.top_degree, info.value.expected) == (6, 11)

    def test_exterior_degrees_must_be_odd(self):
        with pytest.raises(ParameterError):
            Presentation(GeneratorAlphabet(()), (), "bad", (4,))


class TestOtherSpaces:
    def test_real_oriented(self):
        presentation = build_real_oriented_odd(5, 2)
        assert presentation.alphabet.names == ("p1'", "e")
        assert [str(r) for r in presentation.relations] == ["p1' + e^2", "p1'*e^2"]
        assert presentation.top_degree() == 6
        assert presentation.poincare_series() == real_oriented_poincare_series(5, 2)
        assert presentation.bundles == {"p1'": "xi_3'", "e": "xi_2"}

    def test_even_ambient_unsupported(self):
        with pytest.raises(UnsupportedSpaceError):
            build_real_oriented_odd(6, 2)
        with pytest.raises(UnsupportedSpaceError):
            real_oriented_poincare_series(6, 2)

    def test_real_sphere_cases(self):
        assert build_real_oriented_odd(5, 1).label == "S:4"
        assert build_real_oriented_odd(5, 4).label == "S:4"

    def test_spheres(self):
        even = build_sphere(4)
        assert [str(r) for r in even.relations] == ["e^2"]
        assert even.top_degree() == 4
        odd = build_sphere(3)
        assert odd.exterior_degrees == (3,)
        assert str(odd.poincare_series()) == "1 + x^3"
        with pytest.raises(ParameterError):
            build_sphere(0)

    def test_dispatch(self):
        assert build_presentation(parse_space("I:8,1")).label == "S:7"
        assert build_presentation(parse_space("RG:7,3")).label == "RG:7,3"
        with pytest.raises(UnsupportedSpaceError):
            build_presentation(parse_space("I:8,4"))
        with pytest.raises(UnsupportedSpaceError):
            build_presentation(ComplexGrass(n=4, k=2))


class TestFactSheets:
    @pytest.mark.parametrize("n, k, rank", [(4, 2, 1), (5, 4, 1), (6, 4, 2), (4, 3, 0), (3, 2, 0)])
    def test_isotropic_h4_rank_matches_ring(self, n, k, rank):
        assert isotropic_h4_rank(n, k) == rank
        assert build_quotient_A(n, k).quotient.graded_dimension(4) == rank

    def test_real_h4_rank(self):
        assert real_oriented_h4_rank(7, 3) == 2
        assert build_real_oriented_odd(7, 3).quotient.graded_dimension(4) == 2
        assert real_oriented_h4_rank(4, 2) == 1

    def test_isotropic_sheets(self):
        sheet = fact_sheet(parse_space("I:8,2"))
        assert (sheet.h1_rank, sheet.h4_rank, sheet.h4_generator_name) == (0, 1, "p1")
        assert sheet.companion_orientable is False
        assert fact_sheet(parse_space("I:10,4")).h4_generator_name == "e"
        assert fact_sheet(parse_space("I:10,3")).companion_orientable is True

    def test_lagrangian_sheet(self):
        sheet = fact_sheet(parse_space("I:8,4"))
        assert (sheet.h1_rank, sheet.h4_rank) == (1, 0)

    def test_sphere_and_complex_sheets(self):
        sheet = fact_sheet(parse_space("RG:8,7"))
        assert sheet.sphere_equivalent.label == "S:7"
        assert sheet.h4_rank == 0
        assert fact_sheet(parse_space("CG:4,2")).h4_rank == 2
