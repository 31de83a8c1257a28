from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wreath_eulerian import (
    IntPolynomial,
    binomial_power,
    is_palindromic,
    is_real_rooted,
    is_unimodal,
    real_root_count,
)
from wreath_eulerian.poly import POS_INF

small_polys = st.builds(
    IntPolynomial,
    st.lists(st.integers(-20, 20), min_size=1, max_size=6).map(tuple))


def grid_root_count(coeffs, lo=-100, hi=100, step=Fraction(1, 64)):
    """Distinct real roots of a square-free polynomial by sign scanning on a
    fine rational grid; independent of the Sturm machinery.  Assumes all
    roots lie in (lo, hi) and are separated by more than ``step``."""
    def ev(x):
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    roots = 0
    x = Fraction(lo)
    prev = ev(x)
    while x < hi:
        x += step
        cur = ev(x)
        if cur == 0:
            roots += 1
            x += step
            cur = ev(x)
        elif (prev < 0) != (cur < 0):
            roots += 1
        prev = cur
    return roots


class TestRingOperations:
    def test_square_of_binomial(self):
        p = IntPolynomial((1, 1))
        assert (p * p).coefficients == (1, 2, 1)

    def test_hand_product(self):
        lhs = IntPolynomial((1, 2, 1)) * IntPolynomial((1, 4, 1))
        assert lhs.coefficients == (1, 6, 10, 6, 1)

    def test_evaluate_counts_group_order(self):
        assert IntPolynomial((1, 4, 1)).evaluate(1) == 6

    def test_add_keeps_longer_degree(self):
        s = IntPolynomial((1, 2)) + IntPolynomial((0, 0, 3))
        assert s.coefficients == (1, 2, 3)

    def test_multiply_nominal_degree_adds(self):
        p = IntPolynomial((1, 0, 0))
        q = IntPolynomial((1, 0))
        assert (p * q).nominal_degree == 3

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            IntPolynomial(())

    @given(small_polys, small_polys, small_polys)
    def test_ring_laws(self, p, q, r):
        assert (p + q).coefficients == (q + p).coefficients
        assert ((p + q) + r).coefficients == (p + (q + r)).coefficients
        assert (p * q).coefficients == (q * p).coefficients
        assert ((p * q) * r).coefficients == (p * (q * r)).coefficients
        lhs = p * (q + r)
        rhs = (p * q) + (p * r)
        assert lhs.coefficients == rhs.coefficients

    @given(small_polys, small_polys, st.integers(-50, 50))
    def test_evaluate_is_multiplicative(self, p, q, x):
        assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)


class TestBinomialPower:
    def test_zeroth_power(self):
        assert binomial_power(0).coefficients == (1,)

    def test_square(self):
        assert binomial_power(2).coefficients == (1, 2, 1)

    def test_fifth_power(self):
        assert binomial_power(5).coefficients == (1, 5, 10, 10, 5, 1)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            binomial_power(-1)


class TestShapePredicates:
    def test_palindromic(self):
        assert is_palindromic(IntPolynomial((1, 6, 10, 6, 1)))
        assert not is_palindromic(IntPolynomial((1, 2)))
        assert not is_palindromic(IntPolynomial((1, 0)))

    def test_unimodal(self):
        assert is_unimodal(IntPolynomial((1, 6, 10, 6, 1)))
        assert not is_unimodal(IntPolynomial((1, 0, 2)))
        assert is_unimodal(IntPolynomial((7,)))
        assert is_unimodal(IntPolynomial((1, 2, 2, 1)))

    def test_zero_polynomial_rejected(self):
        zero = IntPolynomial((0, 0))
        with pytest.raises(ValueError):
            is_palindromic(zero)
        with pytest.raises(ValueError):
            is_unimodal(zero)
        with pytest.raises(ValueError):
            is_real_rooted(zero)
        with pytest.raises(ValueError):
            real_root_count(zero)


class TestRealRootedness:
    def test_positive_discriminant_quadratic(self):
        assert is_real_rooted(IntPolynomial((1, 4, 1)))
        assert real_root_count(IntPolynomial((1, 4, 1))) == 2

    def test_negative_discriminant_quadratic(self):
        assert not is_real_rooted(IntPolynomial((1, 1, 1)))
        assert real_root_count(IntPolynomial((1, 1, 1))) == 0

    def test_product_of_real_rooted_factors(self):
        p = binomial_power(4) * IntPolynomial((1, 4, 1))
        assert is_real_rooted(p)
        # -1 is a quadruple root: 5 distinct roots would overcount it.
        assert real_root_count(p) == 3

    def test_repeated_roots(self):
        p = IntPolynomial((1, 2, 1))  # (1+x)^2
        assert is_real_rooted(p)
        assert real_root_count(p) == 1

    def test_mixed_multiplicity_fails_when_complex_pair_present(self):
        p = IntPolynomial((1, 2, 1)) * IntPolynomial((1, 1, 1))
        assert not is_real_rooted(p)
        assert real_root_count(p) == 1

    def test_constant_is_real_rooted(self):
        assert is_real_rooted(IntPolynomial((5,)))
        assert real_root_count(IntPolynomial((5,))) == 0

    def test_trailing_zeros_use_effective_degree(self):
        p = IntPolynomial((1, 2, 1, 0, 0))
        assert is_real_rooted(p)

    @pytest.mark.parametrize("m", [1, 2, 5])
    def test_binomial_factor_preserves_real_rootedness(self, m):
        for base in (IntPolynomial((1, 4, 1)), IntPolynomial((2, 3, 1)),
                     IntPolynomial((1, 11, 11, 1))):
            assert is_real_rooted(base)
            assert is_real_rooted(base * binomial_power(m))

    def test_positive_coefficients_have_no_positive_roots(self):
        for p in (IntPolynomial((1, 6, 10, 6, 1)),
                  IntPolynomial((1, 1, 1)),
                  IntPolynomial((3, 5)),
                  IntPolynomial((1, 11, 11, 1))):
            assert real_root_count(p, 0, POS_INF) == 0

    @pytest.mark.parametrize("coeffs,expected", [
        # quadratics by discriminant sign
        ((1, 4, 1), 2),
        ((-3, 2, 1), 2),
        ((1, 1, 1), 0),
        ((4, -4, 1), 1),  # (x-2)^2
        # cubics by known root structure
        ((0, -1, 0, 1), 3),     # x(x-1)(x+1)
        ((1, 1, 1, 1), 1),      # one real root at -1
        ((-6, 11, -6, 1), 3),   # (x-1)(x-2)(x-3)
        ((2, 3, 0, 1), 1),
    ])
    def test_discriminant_battery(self, coeffs, expected):
        assert real_root_count(IntPolynomial(coeffs)) == expected

    @pytest.mark.parametrize("coeffs", [
        (1, 4, 1), (-3, 2, 1), (1, 1, 1),
        (0, -1, 0, 1), (1, 1, 1, 1), (-6, 11, -6, 1), (2, 3, 0, 1),
    ])
    def test_agrees_with_bisection(self, coeffs):
        assert real_root_count(IntPolynomial(coeffs)) == \
            grid_root_count(coeffs)
