"""Binomials and exact polynomials."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jumppaths.exactmath import (
    InexactDivisionError,
    Polynomial,
    binom,
    binomial_row,
)


def convolve_oracle(a, b):
    """Coefficient-by-coefficient convolution, kept separate from the
    production multiply on purpose."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i in range(len(a)):
        for j in range(len(b)):
            out[i + j] += a[i] * b[j]
    return out


class TestBinom:
    def test_hand_values(self):
        assert binom(5, 2) == 10
        assert binom(7, 0) == 1
        assert binom(3, 5) == 0

    def test_out_of_range_is_zero(self):
        assert binom(4, -1) == 0
        assert binom(0, 1) == 0
        assert binom(-1, 0) == 0

    def test_symmetry_up_to_200(self):
        for n in range(0, 201, 7):
            for k in range(n + 1):
                assert binom(n, k) == binom(n, n - k)

    def test_pascal_up_to_200(self):
        for n in range(1, 201):
            for k in range(n + 1):
                assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)

    def test_large_argument_exactness(self):
        # spot value against the multiplicative definition
        n, k = 1000, 500
        prod = 1
        for i in range(k):
            prod = prod * (n - i) // (i + 1)
        assert binom(n, k) == prod


coeff_lists = st.lists(st.integers(min_value=-50, max_value=50), max_size=65)


class TestPolynomial:
    def test_trailing_zeros_stripped(self):
        assert Polynomial([1, 2, 0, 0]).coefficients == (1, 2)
        assert Polynomial([0, 0]).coefficients == ()
        assert Polynomial().degree == -1

    def test_hand_product(self):
        assert Polynomial([1, 1]) * Polynomial([1, 2]) == Polynomial([1, 3, 2])

    def test_multiply_by_one(self):
        p = Polynomial([3, 0, 7])
        assert p * Polynomial([1]) == p

    def test_product_against_convolution_oracle(self):
        a = [1, 2, 1]           # (1+x)^2
        b = [1, 6, 6]
        expected = convolve_oracle(a, b)
        assert expected == [1, 8, 19, 18, 6]
        assert Polynomial(a) * Polynomial(b) == Polynomial(expected)

    def test_evaluate_at_one(self):
        assert Polynomial([1, 3, 2]).evaluate(1) == 6
        assert Polynomial([1, 8, 19, 18, 6]).evaluate(1) == 52

    def test_evaluate_at_zero_gives_constant(self):
        assert Polynomial([5, 3, 2]).evaluate(0) == 5
        assert Polynomial().evaluate(Fraction(3, 7)) == 0

    def test_evaluate_rational(self):
        p = Polynomial([1, 1])
        assert p.evaluate(Fraction(1, 2)) == Fraction(3, 2)

    def test_derivative_hand(self):
        assert Polynomial([1, 3, 2]).derivative() == Polynomial([3, 4])
        assert Polynomial([9]).derivative() == Polynomial()

    def test_derivative_term_oracle(self):
        coeffs = [1, 8, 19, 18, 6]
        oracle = [k * c for k, c in enumerate(coeffs)][1:]
        d = Polynomial(coeffs).derivative()
        assert list(d.coefficients) == oracle
        assert d.evaluate(1) == 124

    def test_addition_subtraction(self):
        a, b = Polynomial([1, 2]), Polynomial([0, 5, 7])
        assert a + b == Polynomial([1, 7, 7])
        assert (a + b) - b == a

    def test_scalar_ops(self):
        p = Polynomial([2, 4])
        assert 3 * p == Polynomial([6, 12])
        assert p.exact_div(2) == Polynomial([1, 2])
        with pytest.raises(InexactDivisionError):
            Polynomial([1, 2]).exact_div(2)

    def test_immutability(self):
        p = Polynomial([1, 2])
        with pytest.raises(AttributeError):
            p.coefficients = (9,)

    def test_binomial_row(self):
        assert binomial_row(0) == Polynomial([1])
        assert binomial_row(3) == Polynomial([1, 3, 3, 1])

    @given(coeff_lists, coeff_lists)
    def test_mul_commutative(self, a, b):
        assert Polynomial(a) * Polynomial(b) == Polynomial(b) * Polynomial(a)

    @settings(max_examples=50)
    @given(coeff_lists, coeff_lists, coeff_lists)
    def test_mul_associative(self, a, b, c):
        pa, pb, pc = Polynomial(a), Polynomial(b), Polynomial(c)
        assert (pa * pb) * pc == pa * (pb * pc)

    @given(
        coeff_lists,
        coeff_lists,
        st.fractions(
            min_value=-5, max_value=5, max_denominator=20
        ),
    )
    def test_eval_is_ring_homomorphism(self, a, b, t):
        pa, pb = Polynomial(a), Polynomial(b)
        assert (pa * pb).evaluate(t) == pa.evaluate(t) * pb.evaluate(t)
        assert (pa + pb).evaluate(t) == pa.evaluate(t) + pb.evaluate(t)

    @given(coeff_lists)
    def test_mul_matches_oracle(self, a):
        b = [1, -3, 2, 5]
        assert Polynomial(a) * Polynomial(b) == Polynomial(convolve_oracle(a, b))
