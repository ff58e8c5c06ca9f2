import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sulvageom.exact_numbers import (
    DivisionByZero,
    NegativeInput,
    Rational,
    ZeroDenominator,
    combine,
    parse_rational,
    rat,
    sqrt_exact,
    to_decimal,
)

nonzero = st.integers(min_value=-10**6, max_value=10**6).filter(lambda n: n != 0)
rationals = st.builds(rat, st.integers(min_value=-10**6, max_value=10**6), nonzero)


def long_division_digits(num: int, den: int, digits: int) -> str:
    """Independent truncated-decimal oracle by schoolbook long division."""
    sign = "-" if num < 0 else ""
    num = abs(num)
    whole, rem = divmod(num, den)
    out = []
    for _ in range(digits):
        rem *= 10
        d, rem = divmod(rem, den)
        out.append(str(d))
    return f"{sign}{whole}." + "".join(out)


class TestRat:
    def test_already_reduced(self):
        q = rat(1224, 1393)
        assert (q.num, q.den) == (1224, 1393)

    def test_sign_and_gcd_normalization(self):
        assert rat(4, -8) == rat(-1, 2)

    def test_large_reduction(self):
        # 332928 = 272 * 1224 and 378896 = 272 * 1393
        assert rat(332928, 378896) == rat(1224, 1393)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            rat(1, 0)

    def test_zero_is_zero_over_one(self):
        q = rat(0, -7)
        assert (q.num, q.den) == (0, 1)


class TestCombine:
    def test_sqrt2_term_sum(self):
        total = rat(0)
        for term in (rat(1), rat(1, 3), rat(1, 12), rat(-1, 408)):
            total = combine("add", total, term)
        assert total == rat(577, 408)

    def test_mul_identity(self):
        q = rat(-7, 13)
        assert combine("mul", q, rat(1)) == q

    def test_residual_subtraction(self):
        got = combine("sub", rat(1224, 1393), rat(9785, 11136))
        assert got == rat(-41, 15512448)
        assert got.den == 8 * 29 * 6 * 8 * 1393

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            combine("div", rat(1), rat(0))

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            combine("pow", rat(1), rat(2))


class TestSqrtExact:
    def test_square_of_25_side(self):
        assert sqrt_exact(rat(390625)) == rat(625)

    def test_heron_radicand(self):
        assert sqrt_exact(rat(36)) == rat(6)

    def test_two_is_not_a_square(self):
        assert sqrt_exact(rat(2)) is None

    def test_fractional_square(self):
        assert sqrt_exact(rat(4, 9)) == rat(2, 3)

    def test_negative_raises(self):
        with pytest.raises(NegativeInput):
            sqrt_exact(rat(-1, 4))


class TestToDecimal:
    def test_sqrt2_six_digits(self):
        assert to_decimal(rat(577, 408), 6).text == "1.414215"

    def test_half(self):
        assert to_decimal(rat(1, 2), 3).text == "0.500"

    def test_i59_ratio_eight_digits(self):
        # frozen from the long-division oracle below
        assert to_decimal(rat(9785, 11136), 8).text == "0.87868175"

    def test_matches_long_division(self):
        for num, den, digits in [(9785, 11136, 8), (577, 408, 6), (-41, 15512448, 12), (22, 7, 10)]:
            assert to_decimal(rat(num, den), digits).text == long_division_digits(num, den, digits)

    def test_digit_count_validated(self):
        with pytest.raises(ValueError):
            to_decimal(rat(1, 2), 0)


def test_parse_rational():
    assert parse_rational("1224/1393") == rat(1224, 1393)
    assert parse_rational("-5") == rat(-5)
    with pytest.raises(ValueError):
        parse_rational("1/2/3")


@given(a=rationals, b=rationals)
def test_add_sub_round_trip(a, b):
    assert combine("sub", combine("add", a, b), b) == a


@given(a=rationals.filter(lambda q: q.num != 0), b=rationals)
def test_mul_div_round_trip(a, b):
    assert combine("div", combine("mul", a, b), a) == b


@given(q=rationals)
def test_normalization_idempotent(q):
    again = Rational(q.num, q.den)
    assert (again.num, again.den) == (q.num, q.den)
    assert again.den > 0
    assert math.gcd(abs(again.num), again.den) == 1


@given(q=rationals)
def test_sqrt_of_square(q):
    assert sqrt_exact(q * q) == abs(q)


@given(n=st.integers(min_value=0, max_value=50), d=st.integers(min_value=1, max_value=50))
def test_not_a_square_is_honest(n, d):
    q = rat(n, d)
    root = sqrt_exact(q)
    if root is not None:
        assert root * root == q
    else:
        # brute force: no p/q with small parts squares to it
        for p in range(0, 51):
            for r in range(1, 51):
                assert rat(p * p, r * r) != q


@given(q=rationals, digits=st.integers(min_value=1, max_value=20))
def test_decimal_truncation_error_bound(q, digits):
    rendered = to_decimal(q, digits)
    assert len(rendered.text.split(".")[1]) == digits
    reparsed = Fraction(rendered.text)
    assert abs(Fraction(q.num, q.den) - reparsed) < Fraction(1, 10**digits)


@given(q=rationals, digits=st.integers(min_value=1, max_value=12))
def test_decimal_matches_long_division(q, digits):
    assert to_decimal(q, digits).text == long_division_digits(q.num, q.den, digits)
