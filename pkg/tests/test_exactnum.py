from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dyckdiv.errors import InvalidArgument, InvalidDenominator, LambdaOutOfRange
from dyckdiv.exactnum import Ordering, Rational, cmp, in_sqrt_window, make_lambda, parse_lambda

positive = st.integers(min_value=1, max_value=10**30)
rationals = st.builds(Rational, positive, positive)


def test_make_lambda_examples():
    assert make_lambda(2, 1) == Rational(2, 1)
    r = make_lambda(6, 4)
    assert (r.num, r.den) == (3, 2)
    with pytest.raises(LambdaOutOfRange):
        make_lambda(1, 1)


@pytest.mark.parametrize("num,den,exc", [(3, 0, InvalidDenominator), (2, 3, LambdaOutOfRange), (0, 1, LambdaOutOfRange)])
def test_make_lambda_rejects(num, den, exc):
    with pytest.raises(exc):
        make_lambda(num, den)


def test_rational_is_normalised():
    assert Rational(10, 4) == Rational(5, 2)
    assert hash(Rational(10, 4)) == hash(Rational(5, 2))
    with pytest.raises(InvalidArgument):
        Rational(0, 3)


@pytest.mark.parametrize(
    "x,y,expected",
    [
        (Rational(3, 2), Rational(2), Ordering.LT),
        (Rational(3, 2), Rational(3, 2), Ordering.EQ),
        (Rational(9, 2), Rational(4), Ordering.GT),
    ],
)
def test_cmp_examples(x, y, expected):
    assert cmp(x, y) is expected


@given(rationals, rationals)
def test_cmp_antisymmetric_and_matches_fraction(x, y):
    assert cmp(x, y) == -cmp(y, x)
    fx, fy = Fraction(x.num, x.den), Fraction(y.num, y.den)
    assert cmp(x, y) == (fx > fy) - (fx < fy)


@given(rationals, rationals, rationals)
def test_cmp_transitive(x, y, z):
    if cmp(x, y) is not Ordering.GT and cmp(y, z) is not Ordering.GT:
        assert cmp(x, z) is not Ordering.GT


@pytest.mark.parametrize(
    "d,n,lam,expected",
    [
        (2, 2, Rational(2), True),  # d^2 = lam*n, right end closed
        (1, 2, Rational(2), False),  # d^2 = n/lam, left end open
        (2, 6, Rational(3, 2), False),  # d = sqrt(6 / (3/2)) exactly
    ],
)
def test_in_sqrt_window_examples(d, n, lam, expected):
    assert in_sqrt_window(d, n, lam) is expected


@given(
    st.integers(1, 10**6),
    st.integers(1, 10**6),
    st.integers(2, 100),
    st.integers(1, 99),
)
def test_in_sqrt_window_matches_high_precision(d, n, p, q):
    if p <= q:
        return
    lam = Rational(p, q)
    d2 = Fraction(d * d)
    ratio = Fraction(lam.num, lam.den)
    if d2 == n / ratio or d2 == ratio * n:
        return  # exact boundaries are covered by the examples
    with mpmath.workdps(60):
        lo = mpmath.sqrt(mpmath.mpf(n) * lam.den / lam.num)
        hi = mpmath.sqrt(mpmath.mpf(n) * lam.num / lam.den)
        assert in_sqrt_window(d, n, lam) == (lo < d <= hi)


def test_in_sqrt_window_boundaries_closed_right_open_left():
    lam = Rational(9, 4)
    # n = 4: sqrt(n/lam) = 4/3, sqrt(lam*n) = 3
    assert in_sqrt_window(3, 4, lam)
    # n = 9: sqrt(n/lam) = 2
    assert not in_sqrt_window(2, 9, lam)
    assert in_sqrt_window(3, 9, lam)


@pytest.mark.parametrize("text,expected", [("2", (2, 1)), ("3/2", (3, 2)), (" 14/6 ", (7, 3))])
def test_parse_lambda(text, expected):
    r = parse_lambda(text)
    assert (r.num, r.den) == expected


@pytest.mark.parametrize("text", ["1", "1/2", "1.5", "-3/2", "a/b", "3/", "3/0"])
def test_parse_lambda_rejects(text):
    with pytest.raises((InvalidArgument, LambdaOutOfRange, InvalidDenominator)):
        parse_lambda(text)
