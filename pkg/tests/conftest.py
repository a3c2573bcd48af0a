import pytest
from typer.testing import CliRunner

from isograss.core.idealalg import QuotientRing
from tests.strategies import C2_E


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def c2_e():
    return C2_E


@pytest.fixture
def a42_ring(c2_e):
    """Q[c2, e]/(c2 + e^2, c2*e^2), the quotient A(4, 2)."""
    c2, e = c2_e.generator("c2"), c2_e.generator("e")
    return QuotientRing.of(c2_e, [c2 + e**2, c2 * e**2])
