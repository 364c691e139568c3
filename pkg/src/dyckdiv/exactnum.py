"""Exact positive rationals and the integer-only inequality kernels.

Nothing in here ever takes a floating-point square root; every decision is a
comparison of integer products.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from math import gcd

from .errors import InvalidArgument, InvalidDenominator, LambdaOutOfRange

__all__ = [
    "Ordering",
    "Rational",
    "make_lambda",
    "parse_lambda",
    "cmp",
    "in_sqrt_window",
]


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True, order=False)
class Rational:
    """A positive rational ``num/den`` kept in lowest terms."""

    num: int
    den: int = 1

    def __post_init__(self) -> None:
        if self.den == 0:
            raise InvalidDenominator("denominator must be nonzero")
        if self.num < 1 or self.den < 1:
            raise InvalidArgument(f"Rational must be positive, got {self.num}/{self.den}")
        g = gcd(self.num, self.den)
        if g != 1:
            object.__setattr__(self, "num", self.num // g)
            object.__setattr__(self, "den", self.den // g)

    def scale(self, k: int) -> Rational:
        """Return ``k * self`` for a positive integer ``k``."""
        return Rational(self.num * k, self.den)

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def __lt__(self, other: Rational) -> bool:
        return cmp(self, other) is Ordering.LT

    def __le__(self, other: Rational) -> bool:
        return cmp(self, other) is not Ordering.GT

    def __gt__(self, other: Rational) -> bool:
        return cmp(self, other) is Ordering.GT

    def __ge__(self, other: Rational) -> bool:
        return cmp(self, other) is not Ordering.LT

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def cmp(x: Rational, y: Rational) -> Ordering:
    lhs = x.num * y.den
    rhs = y.num * x.den
    if lhs < rhs:
        return Ordering.LT
    if lhs > rhs:
        return Ordering.GT
    return Ordering.EQ


def make_lambda(num: int, den: int = 1) -> Rational:
    """Build a scale factor ``num/den``, which must be strictly greater than 1."""
    if den == 0:
        raise InvalidDenominator("lambda denominator must be nonzero")
    if num < 1 or den < 1:
        raise LambdaOutOfRange(f"lambda must be > 1, got {num}/{den}")
    if num <= den:
        raise LambdaOutOfRange(f"lambda must be > 1, got {num}/{den}")
    return Rational(num, den)


_LAMBDA_RE = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_lambda(text: str) -> Rational:
    """Parse ``"P/Q"`` or ``"P"``."""
    m = _LAMBDA_RE.match(text)
    if m is None:
        raise InvalidArgument(f"cannot parse lambda {text!r}; expected P/Q or P")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return make_lambda(num, den)


def in_sqrt_window(d: int, n: int, lam: Rational) -> bool:
    """True iff ``sqrt(n/lam) < d <= sqrt(lam*n)``.

    Left end open, right end closed.
    """
    if d < 1 or n < 1:
        raise InvalidArgument("d and n must be positive")
    d2 = d * d
    return n * lam.den < d2 * lam.num and d2 * lam.den <= lam.num * n
