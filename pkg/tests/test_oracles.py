from fractions import Fraction
from itertools import combinations

import pytest

from dyckdiv import oracles
from dyckdiv.exactnum import make_lambda

from .conftest import naive_divisors

TWO = make_lambda(2)
THREE_HALVES = make_lambda(3, 2)


# --- independent oracles --------------------------------------------------


def brute_middle(n, lam):
    r = Fraction(lam.num, lam.den)
    return sum(1 for d in naive_divisors(n) if Fraction(n) / r < d * d <= r * n)


def brute_blocks(n, lam):
    r = Fraction(lam.num, lam.den)
    intervals = sorted((Fraction(d), r * d) for d in naive_divisors(n))
    components = 0
    end = None
    for lo, hi in intervals:
        if end is None or lo > end:
            components += 1
            end = hi
        else:
            end = max(end, hi)
    return components


def brute_max_chain(n, lam):
    r = Fraction(lam.num, lam.den)
    divs = naive_divisors(n)
    for h in range(len(divs), 0, -1):
        for chain in combinations(divs, h):
            if chain[-1] < r * chain[0]:
                return h
    return 0


def brute_pyth_double_loop(n):
    for x in range(1, 2 * n):
        for y in range(x, 2 * n - x):
            z = 2 * n - x - y
            if z >= 1 and x * x + y * y == z * z:
                return True
    return False


def brute_even_trapezoidal(n):
    for a in range(1, n + 1):
        for m in range(1, n + 1):
            total = sum(range(a, a + 2 * m))
            if total == n:
                return True
            if total > n:
                break
    return False


# --- examples ---------------------------------------------------------------


@pytest.mark.parametrize("n,lam,expected", [(6, TWO, 2), (5, TWO, 0), (6, THREE_HALVES, 1)])
def test_middle_count_examples(n, lam, expected):
    assert oracles.middle_count(n, lam) == expected


@pytest.mark.parametrize("n,lam,expected", [(6, TWO, 1), (5, TWO, 2), (6, THREE_HALVES, 3)])
def test_blocks_count_examples(n, lam, expected):
    assert oracles.blocks_count(n, lam) == expected


@pytest.mark.parametrize("n,expected", [(6, True), (5, False), (1, True)])
def test_densely_divisible_examples(n, expected):
    assert oracles.is_densely_divisible(n, TWO) is expected


# frozen from brute_max_chain (subset enumeration)
@pytest.mark.parametrize("n,expected", [(2, 1), (6, 2), (12, 2)])
def test_max_chain_examples(n, expected):
    assert brute_max_chain(n, TWO) == expected
    assert oracles.max_chain(n, TWO) == expected


@pytest.mark.parametrize("n,expected", [(3, True), (6, False), (8, False)])
def test_even_trapezoidal_examples(n, expected):
    assert oracles.is_even_trapezoidal(n) is expected


@pytest.mark.parametrize("n,expected", [(3, 1), (6, 0), (1, 0)])
def test_even_trapezoidal_divisor_count_examples(n, expected):
    assert oracles.even_trapezoidal_divisor_count(n) == expected


@pytest.mark.parametrize("n,expected", [(6, True), (8, False), (15, True)])
def test_pythagorean_examples(n, expected):
    assert oracles.is_pythagorean_semiperimeter(n) is expected


@pytest.mark.parametrize("n,expected", [(6, True), (8, False), (15, True)])
def test_close_divisor_pair_examples(n, expected):
    assert oracles.has_close_divisor_pair(n) is expected


@pytest.mark.parametrize("n,expected", [(1, True), (16, True), (12, False)])
def test_power_of_two_examples(n, expected):
    assert oracles.is_power_of_two(n) is expected


# --- against brute force ---------------------------------------------------


def test_middle_and_blocks_match_brute_force(lam):
    for n in range(1, 601):
        assert oracles.middle_count(n, lam) == brute_middle(n, lam), n
        assert oracles.blocks_count(n, lam) == brute_blocks(n, lam), n


def test_max_chain_matches_subset_enumeration(lam):
    for n in range(1, 241):
        assert oracles.max_chain(n, lam) == brute_max_chain(n, lam), n


def test_pythagorean_matches_double_loop(impl):
    for n in range(1, 161):
        assert impl.is_pythagorean_semiperimeter(n) == brute_pyth_double_loop(n), n


def test_pythagorean_sieve_matches_search():
    flags = oracles.pythagorean_semiperimeter_flags(4000)
    for n in range(1, 4001):
        assert bool(flags[n]) == oracles.is_pythagorean_semiperimeter(n), n


def test_even_trapezoidal_matches_consecutive_sums():
    for n in range(1, 301):
        assert oracles.is_even_trapezoidal(n) == brute_even_trapezoidal(n), n


def test_power_of_two_matches_bit_trick():
    for n in range(1, 5000):
        assert oracles.is_power_of_two(n) == (n & (n - 1) == 0)


# --- invariants ---------------------------------------------------------------


def test_trapezoidal_direct_vs_divisor_formula():
    for n in range(1, 3001):
        assert oracles.is_even_trapezoidal(n) == (oracles.even_trapezoidal_divisor_count(n) > 0), n


def test_pythagorean_vs_close_divisor_pair():
    for n in range(1, 501):
        assert oracles.is_pythagorean_semiperimeter(n) == oracles.has_close_divisor_pair(n), n


def test_densely_divisible_means_no_gaps(lam):
    for n in range(1, 1001):
        if oracles.is_densely_divisible(n, lam):
            divs = naive_divisors(n)
            assert all(b * lam.den <= lam.num * a for a, b in zip(divs, divs[1:]))


def test_powers_of_two_are_neither_trapezoidal_nor_pythagorean():
    for k in range(0, 14):
        n = 2**k
        assert not oracles.is_even_trapezoidal(n)
        assert not oracles.is_pythagorean_semiperimeter(n)


def test_profile_invariants(lam):
    for n in range(1, 400):
        p = oracles.profile(n, lam)
        assert p.densely_divisible == (p.blocks_count == 1)
        assert p.blocks_count <= len(naive_divisors(n))
        assert p.to_json()["n"] == n
