import pytest

from isograss.core.errors import ParameterError
from isograss.core.series import PoincareSeries


def test_trailing_zeros_are_stripped():
    assert PoincareSeries((1, 0, 0)) == PoincareSeries.one()
    assert PoincareSeries((0, 0)).coefficients == ()


def test_negative_coefficients_rejected():
    with pytest.raises(ParameterError):
        PoincareSeries((1, -1))


def test_rendering():
    assert str(PoincareSeries((1, 0, 1, 0, 2))) == "1 + x^2 + 2*x^4"
    assert str(PoincareSeries((0, 3))) == "3*x"
    assert str(PoincareSeries()) == "0"


def test_exterior_product():
    series = PoincareSeries.exterior([5, 7])
    assert str(series) == "1 + x^5 + x^7 + x^12"
    assert series.total_rank == 4
    assert series.euler == 0
    assert PoincareSeries.exterior([]) == PoincareSeries.one()


def test_product_of_truncated_polynomial_and_exterior():
    quotient = PoincareSeries((1, 0, 1, 0, 1, 0, 1))
    series = quotient * PoincareSeries.exterior([5])
    assert str(series) == "1 + x^2 + x^4 + x^5 + x^6 + x^7 + x^9 + x^11"
    assert series.top_degree == 11
    assert series.is_palindromic()


def test_palindrome_relative_to_given_top():
    series = PoincareSeries((1, 0, 1))
    assert series.is_palindromic()
    assert not series.is_palindromic(6)
    assert not PoincareSeries((1, 2)).is_palindromic()
    assert PoincareSeries().is_palindromic()


def test_coefficients_and_top_degree():
    series = PoincareSeries((1, 0, 2))
    assert series.coefficient(2) == 2
    assert series.coefficient(9) == 0
    assert series.coefficient(-1) == 0
    assert PoincareSeries().top_degree is None
    assert series.truncated(1) == PoincareSeries.one()


def test_first_excess():
    small = PoincareSeries((1, 0, 1))
    large = PoincareSeries((1, 0, 2, 0, 1))
    assert large.first_excess_over(small) == 2
    assert small.first_excess_over(large) is None


def test_monomial():
    assert PoincareSeries.monomial(3, 2).coefficients == (0, 0, 0, 2)
    with pytest.raises(ParameterError):
        PoincareSeries.monomial(-1)
