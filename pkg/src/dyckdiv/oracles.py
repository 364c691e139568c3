"""Word-free arithmetic ground truth.

Each predicate is computed straight from its definition on divisors or on
integer triples, never through the encoding, so the harness can compare word
statistics against these without circularity.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd

from . import _accel
from .encoder import divisors, in_scaled_divisors
from .errors import InvalidArgument
from .exactnum import Rational, in_sqrt_window

__all__ = [
    "IntegerProfile",
    "middle_count",
    "blocks_count",
    "is_densely_divisible",
    "max_chain",
    "is_even_trapezoidal",
    "even_trapezoidal_divisor_count",
    "is_pythagorean_semiperimeter",
    "pythagorean_semiperimeter_flags",
    "has_close_divisor_pair",
    "is_power_of_two",
    "windowed_divisor_count",
    "profile",
]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")


def _divs(n: int, divs: list[int] | None) -> list[int]:
    _check_n(n)
    return divisors(n) if divs is None else divs


def middle_count(n: int, lam: Rational, divs: list[int] | None = None) -> int:
    """Number of divisors ``d`` with ``sqrt(n/lam) < d <= sqrt(lam*n)``."""
    divs = _divs(n, divs)
    k = _accel.pick(n, lam.num, lam.den)
    if k is _accel._pykernels:
        return sum(1 for d in divs if in_sqrt_window(d, n, lam))
    return k.middle_count(n, divs, lam.num, lam.den)


def blocks_count(n: int, lam: Rational, divs: list[int] | None = None) -> int:
    """Connected components of the union of closed intervals ``[d, lam*d]`` over ``d | n``."""
    divs = _divs(n, divs)
    return _accel.pick(n, lam.num, lam.den).blocks_count(divs, lam.num, lam.den)


def is_densely_divisible(n: int, lam: Rational, divs: list[int] | None = None) -> bool:
    return blocks_count(n, lam, divs) == 1


def max_chain(n: int, lam: Rational, divs: list[int] | None = None) -> int:
    """Largest ``h`` with divisors ``d_1 < ... < d_h < lam*d_1``."""
    divs = _divs(n, divs)
    return _accel.pick(n, lam.num, lam.den).max_chain(divs, lam.num, lam.den)


def windowed_divisor_count(n: int, lam: Rational, divs: list[int] | None = None) -> int:
    """#{d | n : d not in lam*D_n and d < sqrt(lam*n)}."""
    divs = _divs(n, divs)
    return _accel.pick(n, lam.num, lam.den).ell_ab_divisor_count(n, divs, lam.num, lam.den)


def is_even_trapezoidal(n: int) -> bool:
    """True iff ``n`` is a sum of an even number of consecutive positive integers."""
    _check_n(n)
    return _accel.pick(n).is_even_trapezoidal(n)


def even_trapezoidal_divisor_count(n: int, divs: list[int] | None = None) -> int:
    """#{d | n : d not in 2*D_n and d > sqrt(2n)}."""
    divs = _divs(n, divs)
    two = Rational(2)
    return sum(1 for d in divs if d * d > 2 * n and not in_scaled_divisors(d, n, two))


def is_pythagorean_semiperimeter(n: int) -> bool:
    """True iff ``x + y + z = 2n`` for some positive ``x^2 + y^2 = z^2``."""
    _check_n(n)
    return _accel.pick(n).is_pythagorean_semiperimeter(n)


def pythagorean_semiperimeter_flags(n_max: int) -> bytearray:
    """``flags[n]`` is 1 iff ``n <= n_max`` is a Pythagorean semi-perimeter.

    Enumerates every triple with semi-perimeter up to ``n_max`` through Euclid's
    parametrization ``k*(m^2 - r^2, 2mr, m^2 + r^2)``, ``m > r``, coprime, of
    opposite parity. Used for long sweeps where per-``n`` search is too slow.
    """
    if n_max < 0:
        raise InvalidArgument("n_max must be >= 0")
    flags = bytearray(n_max + 1)
    m = 2
    while m * (m + 1) <= n_max:
        for r in range(1 + m % 2, m, 2):
            if gcd(m, r) != 1:
                continue
            x, y, z = m * m - r * r, 2 * m * r, m * m + r * r
            assert x * x + y * y == z * z
            s = (x + y + z) // 2
            for t in range(s, n_max + 1, s):
                flags[t] = 1
        m += 1
    return flags


def has_close_divisor_pair(n: int, divs: list[int] | None = None) -> bool:
    """True iff two consecutive divisors satisfy ``d_i < d_{i+1} < 2*d_i``."""
    divs = _divs(n, divs)
    return any(divs[i + 1] < 2 * divs[i] for i in range(len(divs) - 1))


def is_power_of_two(n: int, divs: list[int] | None = None) -> bool:
    """True iff ``n`` has exactly one odd divisor (``n = 1`` included)."""
    divs = _divs(n, divs)
    return sum(1 for d in divs if d % 2) == 1


@dataclass(frozen=True)
class IntegerProfile:
    n: int
    middle_count: int
    blocks_count: int
    densely_divisible: bool
    even_trapezoidal: bool
    pythagorean_semiperimeter: bool
    power_of_two: bool
    max_chain: int

    def to_json(self) -> dict:
        return asdict(self)


def profile(n: int, lam: Rational) -> IntegerProfile:
    divs = divisors(n)
    blocks = blocks_count(n, lam, divs)
    return IntegerProfile(
        n=n,
        middle_count=middle_count(n, lam, divs),
        blocks_count=blocks,
        densely_divisible=blocks == 1,
        even_trapezoidal=is_even_trapezoidal(n),
        pythagorean_semiperimeter=is_pythagorean_semiperimeter(n),
        power_of_two=is_power_of_two(n, divs),
        max_chain=max_chain(n, lam, divs),
    )
