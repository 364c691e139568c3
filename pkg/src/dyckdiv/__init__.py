"""Integers as symmetric Dyck words, with divisor oracles and exhaustive theorem sweeps.

``encode(n, lam)`` reads the divisors of ``n`` and their ``lam``-multiples in
increasing order, writing ``a`` for a divisor and ``b`` for a multiple, after
discarding values that are both. Word statistics of the result (centered
tunnels, irreducible factors, height) match divisor counts that
:mod:`dyckdiv.oracles` computes directly, and :mod:`dyckdiv.harness` checks
those identities over whole ranges.
"""
from ._accel import HAVE_EXTENSION, IMPLEMENTATION
from .encoder import CutSequence, cut_sequence, divisors, encode, preimages
from .exactnum import Rational, make_lambda, parse_lambda

__version__ = "0.1.0"

__all__ = [
    "HAVE_EXTENSION",
    "IMPLEMENTATION",
    "CutSequence",
    "Rational",
    "cut_sequence",
    "divisors",
    "encode",
    "make_lambda",
    "parse_lambda",
    "preimages",
]
