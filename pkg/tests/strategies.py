from hypothesis import strategies as st

from isograss.core.polyring import GeneratorAlphabet, GradedPoly

C2_E = GeneratorAlphabet.of(("c2", 4), ("e", 2))
MIXED = GeneratorAlphabet.of(("c2", 4), ("p1", 4), ("e", 2))
PRIMED = GeneratorAlphabet.of(("p1'", 4), ("e'", 4), ("p1", 4))

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def polynomials(alphabet: GeneratorAlphabet = C2_E, max_exponent: int = 3, max_terms: int = 4):
    """Random polynomials with small exponents over ``alphabet``."""
    monomials = st.tuples(*[st.integers(0, max_exponent) for _ in alphabet.names])
    return st.dictionaries(monomials, coefficients, max_size=max_terms).map(
        lambda terms: GradedPoly(alphabet, terms)
    )


expression_text = st.text(alphabet="ce p1234'+-*^/()0", max_size=30)
