from fractions import Fraction
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import trial_factor
from threej_zeros.exact import (
    HalfInt,
    IncommensurableRadicands,
    SqrtRational,
    factorial,
    factorial_factored,
    primes_up_to,
    sqrt_add,
    sqrt_mul,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=60)
pos_rationals = st.fractions(min_value=0, max_value=50, max_denominator=60)


class TestHalfInt:
    @pytest.mark.parametrize("text,twice", [("7/2", 7), ("3.5", 7), ("-1/2", -1), ("4", 8), ("0", 0)])
    def test_parse(self, text, twice):
        assert HalfInt.of(text).twice == twice

    @pytest.mark.parametrize("bad", ["1/3", "0.25", "x"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            HalfInt.of(bad)

    @given(st.integers(-100, 100), st.integers(-100, 100))
    def test_arithmetic_closed(self, x, y):
        a, b = HalfInt(x), HalfInt(y)
        assert (a + b).twice == x + y
        assert (a - b).twice == x - y
        assert (a < b) == (x < y)
        assert a.is_integer == (x % 2 == 0)

    def test_str(self):
        assert str(HalfInt(7)) == "7/2" and str(HalfInt(-4)) == "-2"


class TestFactorials:
    def test_examples(self):
        assert factorial_factored(0).exponents == {}
        assert factorial_factored(4).exponents == {2: 3, 3: 1}
        assert factorial_factored(10).exponents == {2: 8, 3: 4, 5: 2, 7: 1}

    @given(st.integers(0, 120))
    def test_matches_trial_division(self, n):
        assert factorial_factored(n).exponents == trial_factor(math.factorial(n))
        assert factorial(n) == math.factorial(n)

    def test_negative(self):
        with pytest.raises(ValueError):
            factorial_factored(-1)

    def test_primes(self):
        assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


class TestSqrtRational:
    def test_mul_examples(self):
        r2 = SqrtRational.sqrt_of(2)
        assert sqrt_mul(r2, r2) == SqrtRational.from_rational(2)
        assert sqrt_mul(SqrtRational(-1, Fraction(1, 3)), SqrtRational.sqrt_of(3)) == SqrtRational.from_rational(-1)
        x = SqrtRational.sqrt_of(Fraction(2, 35))
        assert (x * x).as_rational() == Fraction(2, 35)

    def test_add_examples(self):
        r2 = SqrtRational.sqrt_of(2)
        assert sqrt_add(r2, -r2).is_zero()
        assert sqrt_add(SqrtRational.sqrt_of(8), r2) == SqrtRational.sqrt_of(18)
        with pytest.raises(IncommensurableRadicands):
            sqrt_add(r2, SqrtRational.sqrt_of(3))

    def test_zero_sign(self):
        z = SqrtRational.zero()
        assert z.sign == 0 and z.is_zero() and not z

    @given(rationals, rationals)
    def test_rational_embedding_is_a_ring_map(self, p, q):
        a, b = SqrtRational.from_rational(p), SqrtRational.from_rational(q)
        assert (a * b).as_rational() == p * q
        assert (a + b).as_rational() == p + q
        assert (a - b).as_rational() == p - q

    @given(pos_rationals, pos_rationals, st.sampled_from([1, -1]), st.sampled_from([1, -1]))
    def test_equality_is_square_and_sign(self, p, q, s1, s2):
        a, b = SqrtRational.sqrt_of(p, s1), SqrtRational.sqrt_of(q, s2)
        same = (p == q == 0) or (p == q and s1 == s2)
        assert (a == b) == same
        assert (a * b).square() == p * q

    @given(pos_rationals, st.integers(1, 20))
    def test_scaling_commensurable(self, p, k):
        a = SqrtRational.sqrt_of(p)
        assert a + a * k == a * (k + 1)
        assert float(a * k) == pytest.approx(k * math.sqrt(p))

    @given(pos_rationals.filter(lambda x: x != 0))
    def test_division_inverts(self, p):
        a = SqrtRational.sqrt_of(p, -1)
        assert (a / a) == SqrtRational.one()
