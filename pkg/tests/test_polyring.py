from fractions import Fraction

import pytest
from hypothesis import given

from isograss.core.errors import IncompatibleRingsError, ParameterError
from isograss.core.exprparse import evaluate_text
from isograss.core.idealalg import complete_intersection_series
from isograss.core.polyring import (
    GeneratorAlphabet,
    GradedPoly,
    format_rational,
    linear_combination,
    monomials_of_degree,
    parse_rational,
    power,
)
from tests.strategies import C2_E, MIXED, PRIMED, coefficients, polynomials


class TestGeneratorAlphabet:
    def test_names_and_degrees(self, c2_e):
        assert c2_e.names == ("c2", "e")
        assert c2_e.degrees == (4, 2)
        assert "e" in c2_e and "p1" not in c2_e
        assert c2_e.degree_of("c2") == 4
        assert str(c2_e) == "{c2:4, e:2}"

    def test_monomials_largest_first(self, c2_e):
        assert monomials_of_degree(c2_e, 4) == ((1, 0), (0, 2))
        assert c2_e.monomials_of_degree(8) == ((2, 0), (1, 2), (0, 4))
        assert monomials_of_degree(c2_e, 3) == ()
        assert monomials_of_degree(c2_e, 0) == ((0, 0),)

    def test_negative_degree(self, c2_e):
        with pytest.raises(ParameterError):
            monomials_of_degree(c2_e, -1)

    @pytest.mark.parametrize("alphabet", [C2_E, MIXED, PRIMED])
    def test_counts_match_generating_function(self, alphabet):
        # coefficients of 1 / prod(1 - x^g)
        counts = complete_intersection_series(alphabet, [], 40)
        for d in range(41):
            found = monomials_of_degree(alphabet, d)
            assert len(found) == counts.coefficient(d)
            assert len(set(found)) == len(found)
            assert all(alphabet.monomial_degree(m) == d for m in found)
            assert list(found) == sorted(found, reverse=True)

    @pytest.mark.parametrize(
        "entries",
        [
            (("c2", 4), ("c2", 4)),
            (("x1", 2),),
            (("e", 0),),
        ],
    )
    def test_invalid_alphabets(self, entries):
        with pytest.raises(ParameterError):
            GeneratorAlphabet(entries)

    def test_primed_names(self):
        alphabet = GeneratorAlphabet.of(("p1'", 4), ("e", 2))
        assert alphabet.names == ("p1'", "e")


class TestRendering:
    def test_square_of_sum(self):
        alphabet = GeneratorAlphabet.of(("c2", 4), ("p1", 4))
        c2, p1 = alphabet.generator("c2"), alphabet.generator("p1")
        assert str((c2 + p1) ** 2) == "c2^2 + 2*c2*p1 + p1^2"

    def test_mixed_degrees_descend(self, c2_e):
        c2, e = c2_e.generator("c2"), c2_e.generator("e")
        assert (c2 + e) ** 2 == c2**2 + 2 * c2 * e + e**2
        assert str((c2 + e) ** 2) == "c2^2 + 2*c2*e + e^2"

    def test_signs_and_fractions(self, c2_e):
        e = c2_e.generator("e")
        assert str(e * Fraction(1, 2) - 3) == "1/2*e - 3"
        assert str(-e) == "-e"
        assert str(c2_e.zero()) == "0"
        assert str(c2_e.constant(Fraction(-2, 3))) == "-2/3"

    def test_rational_helpers(self):
        assert format_rational(Fraction(6, 4)) == "3/2"
        assert format_rational(5) == "5"
        assert parse_rational(" -3/6 ") == Fraction(-1, 2)
        with pytest.raises(ParameterError):
            parse_rational("1/0")
        with pytest.raises(ParameterError):
            parse_rational("a")


class TestArithmetic:
    def test_cancellation_leaves_zero(self, c2_e):
        e = c2_e.generator("e")
        assert (e - e).is_zero
        assert not (e - e)
        assert e * 0 == 0

    def test_constants_compare_with_numbers(self, c2_e):
        assert c2_e.constant(3) == 3
        assert c2_e.one() == Fraction(1)

    def test_incompatible_alphabets(self, c2_e):
        with pytest.raises(IncompatibleRingsError):
            c2_e.generator("e") + MIXED.generator("e")

    def test_degree(self, c2_e):
        c2, e = c2_e.generator("c2"), c2_e.generator("e")
        assert (c2 * e).degree == 6
        assert (c2 + e).degrees() == [2, 4]
        assert not (c2 + e).is_homogeneous
        with pytest.raises(ParameterError):
            (c2 + e).degree
        with pytest.raises(ParameterError):
            c2_e.zero().degree

    def test_homogeneous_parts(self, c2_e):
        c2, e = c2_e.generator("c2"), c2_e.generator("e")
        x = c2 + e**2 + e
        assert x.homogeneous_part(4) == c2 + e**2
        assert x.homogeneous_part(2) == e
        assert sorted(x.homogeneous_parts()) == [2, 4]

    def test_power(self, c2_e):
        e = c2_e.generator("e")
        assert power(e, 0) == 1
        assert power(e + 1, 3) == e**3 + 3 * e**2 + 3 * e + 1
        with pytest.raises(ParameterError):
            power(e, -1)

    def test_linear_combination(self, c2_e):
        c2, e = c2_e.generator("c2"), c2_e.generator("e")
        combined = linear_combination([(2, c2), (Fraction(1, 2), e**2)], c2_e)
        assert str(combined) == "2*c2 + 1/2*e^2"

    def test_exponents_must_fit(self, c2_e):
        with pytest.raises(ParameterError):
            GradedPoly(c2_e, {(1, 0, 0): 1})
        with pytest.raises(ParameterError):
            GradedPoly(c2_e, {(-1, 0): 1})


class TestRingAxioms:
    @given(polynomials(), polynomials())
    def test_commutative(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(polynomials(max_exponent=2), polynomials(max_exponent=2), polynomials(max_exponent=2))
    def test_associative_and_distributive(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(polynomials())
    def test_additive_inverse(self, a):
        assert (a - a).is_zero
        assert a + a.alphabet.zero() == a
        assert a * a.alphabet.one() == a

    @given(polynomials(MIXED))
    def test_render_parses_back(self, a):
        assert evaluate_text(str(a), MIXED) == a

    @given(polynomials())
    def test_hash_follows_equality(self, a):
        copy = GradedPoly(a.alphabet, dict(a.items()))
        assert copy == a
        assert hash(copy) == hash(a)

    @given(coefficients)
    def test_constants_hash_like_scalars(self, value):
        constant = C2_E.constant(value)
        assert constant == value
        assert hash(constant) == hash(value)
        assert len({constant, value}) == 1

    def test_zero_hashes_like_zero(self, c2_e):
        assert c2_e.zero() == 0
        assert hash(c2_e.zero()) == hash(0)
        assert {c2_e.one(): "unit"}[1] == "unit"
