"""Integers to words: the tagged, sorted symmetric difference of ``D_n`` and ``lam*D_n``.

``D_n`` is the set of divisors of ``n``. Elements of ``D_n`` missing from
``lam*D_n`` become ``a``, elements of ``lam*D_n`` missing from ``D_n`` become
``b``, read in increasing order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import _accel
from .errors import EncodingInvariantError, InvalidArgument
from .exactnum import Ordering, Rational, cmp

__all__ = [
    "Side",
    "CutEntry",
    "CutSequence",
    "divisors",
    "divisor_table",
    "lambda_multiple_in_divisors",
    "in_scaled_divisors",
    "cut_sequence",
    "encode",
    "encode_with_divisors",
    "preimages",
]


class Side(enum.Enum):
    A_SIDE = "a"
    B_SIDE = "b"


@dataclass(frozen=True)
class CutEntry:
    value: Rational
    tag: Side
    divisor: int

    def to_json(self) -> dict:
        return {"value": str(self.value), "tag": self.tag.value, "divisor": self.divisor}


@dataclass(frozen=True)
class CutSequence:
    n: int
    lam: Rational
    entries: tuple[CutEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def values(self) -> list[Rational]:
        return [e.value for e in self.entries]

    @property
    def word(self) -> str:
        return "".join(e.tag.value for e in self.entries)

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")


def divisors(n: int) -> list[int]:
    """All divisors of ``n`` in increasing order, by trial division."""
    _check_n(n)
    return _accel.pick(n).divisors(n)


def divisor_table(lo: int, hi: int) -> list[list[int]]:
    """Sorted divisor lists for every ``n`` in ``[lo, hi]`` (segmented sieve).

    Entry ``k`` holds the divisors of ``lo + k``.
    """
    if lo < 1 or hi < lo:
        raise InvalidArgument(f"bad range [{lo}, {hi}]")
    table: list[list[int]] = [[] for _ in range(hi - lo + 1)]
    for d in range(1, hi + 1):
        start = -(-lo // d) * d
        for m in range(start, hi + 1, d):
            table[m - lo].append(d)
    return table


def in_scaled_divisors(d: int, n: int, lam: Rational) -> bool:
    """True iff the integer ``d`` lies in ``lam*D_n``."""
    qd = lam.den * d
    return qd % lam.num == 0 and n % (qd // lam.num) == 0


def lambda_multiple_in_divisors(e: int, n: int, lam: Rational) -> bool:
    """True iff ``lam*e`` lies in ``D_n``."""
    pe = lam.num * e
    return pe % lam.den == 0 and n % (pe // lam.den) == 0


def cut_sequence(n: int, lam: Rational) -> CutSequence:
    """The symmetric difference, merged in increasing order and tagged."""
    _check_n(n)
    divs = divisors(n)
    a_side = [CutEntry(Rational(d), Side.A_SIDE, d) for d in divs if not in_scaled_divisors(d, n, lam)]
    b_side = [
        CutEntry(lam.scale(e), Side.B_SIDE, e) for e in divs if not lambda_multiple_in_divisors(e, n, lam)
    ]
    merged: list[CutEntry] = []
    i = j = 0
    while i < len(a_side) and j < len(b_side):
        order = cmp(a_side[i].value, b_side[j].value)
        if order is Ordering.LT:
            merged.append(a_side[i])
            i += 1
        elif order is Ordering.GT:
            merged.append(b_side[j])
            j += 1
        else:
            raise EncodingInvariantError(f"value {a_side[i].value} on both sides for n={n}")
    merged.extend(a_side[i:])
    merged.extend(b_side[j:])
    if len(merged) % 2:
        raise EncodingInvariantError(f"odd cut sequence length for n={n}")
    return CutSequence(n, lam, tuple(merged))


def encode_with_divisors(n: int, divs: list[int], lam: Rational) -> str:
    """Encode ``n`` given its precomputed sorted divisor list. Output is validated."""
    k = _accel.pick(n, lam.num, lam.den)
    w = k.encode_word(n, divs, lam.num, lam.den)
    if not w or not k.is_symmetric_dyck(w):
        raise EncodingInvariantError(f"encode({n}, {lam}) = {w!r} is not a nonempty symmetric Dyck word")
    return w


def encode(n: int, lam: Rational) -> str:
    """The word of ``n`` at scale ``lam``: a nonempty symmetric Dyck word."""
    _check_n(n)
    return encode_with_divisors(n, divisors(n), lam)


def preimages(w: str, lam: Rational, n_max: int) -> list[int]:
    """Every ``n <= n_max`` whose encoding is ``w``, by exhaustive scan."""
    if n_max < 1:
        raise InvalidArgument("n_max must be >= 1")
    if not _accel.kernels.is_symmetric_dyck(w):
        return []
    out = []
    for n, divs in enumerate(divisor_table(1, n_max), start=1):
        # the encoding has length 2 * #(divisors not in lam*D_n) <= 2 * #D_n
        if 2 * len(divs) < len(w):
            continue
        if encode_with_divisors(n, divs, lam) == w:
            out.append(n)
    return out
