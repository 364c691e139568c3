"""Word machinery over ``{a, b}``: Dyck predicates, factorizations, central concatenation.

Words are plain ``str``. Two monoid structures live on Dyck words here:

* ordinary concatenation, freely generated by irreducible words ``a D b``;
  :func:`omega` counts generators;
* central concatenation, transported through the outside-in pairing
  :func:`phi`; :func:`ct_morphism` counts ``ab`` generators of it, and
  :func:`ct_pairs` computes the same number directly as matched letter pairs
  symmetric about the midpoint.
"""
from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Sequence
from itertools import product

from ._accel import kernels
from .errors import InvalidArgument, NotADyckWord, OddLength

__all__ = [
    "PairLetter",
    "CentralImage",
    "is_dyck",
    "is_symmetric_dyck",
    "mirror",
    "height",
    "irreducible_factorization",
    "omega",
    "phi",
    "phi_inv",
    "central_concat",
    "ell",
    "ell_counts",
    "ct_pairs",
    "central_factorization",
    "ct_morphism",
    "enumerate_dyck",
    "enumerate_symmetric_dyck",
    "format_central_image",
    "parse_central_image",
]


class PairLetter(enum.Enum):
    AA = "aa"
    AB = "ab"
    BA = "ba"
    BB = "bb"

    def __str__(self) -> str:
        return self.value


CentralImage = tuple[PairLetter, ...]


def _check_alphabet(w: str) -> None:
    if not isinstance(w, str) or w.strip("ab"):
        raise InvalidArgument(f"word must be a string over 'ab', got {w!r}")


def _require_dyck(w: str) -> None:
    if not is_dyck(w):
        raise NotADyckWord(f"{w!r} is not a Dyck word")


def _require_even(w: str) -> None:
    _check_alphabet(w)
    if len(w) % 2:
        raise OddLength(f"{w!r} has odd length")


def is_dyck(w: str) -> bool:
    return isinstance(w, str) and kernels.is_dyck(w)


def mirror(w: str) -> str:
    """Reverse ``w`` and swap ``a`` with ``b``."""
    return w[::-1].translate(str.maketrans("ab", "ba"))


def is_symmetric_dyck(w: str) -> bool:
    return isinstance(w, str) and kernels.is_symmetric_dyck(w)


def height(w: str) -> int:
    _require_dyck(w)
    return kernels.height(w)


def irreducible_factorization(w: str) -> list[str]:
    """Split ``w`` at every interior return to height zero."""
    _require_dyck(w)
    factors = []
    h = start = 0
    for i, c in enumerate(w):
        h += 1 if c == "a" else -1
        if h == 0:
            factors.append(w[start : i + 1])
            start = i + 1
    return factors


def omega(w: str) -> int:
    _require_dyck(w)
    return kernels.omega(w)


def phi(w: str) -> CentralImage:
    """Outside-in pairing: letter ``k`` of the image is ``(w[k], w[-1-k])``."""
    _require_even(w)
    n = len(w)
    return tuple(PairLetter(w[k] + w[n - 1 - k]) for k in range(n // 2))


def phi_inv(pairs: Iterable[PairLetter]) -> str:
    pairs = [PairLetter(p) for p in pairs]
    left = "".join(p.value[0] for p in pairs)
    right = "".join(p.value[1] for p in reversed(pairs))
    return left + right


def central_concat(u: str, v: str) -> str:
    """``u`` wrapped around ``v``: the first half of ``u``, then ``v``, then its second half."""
    _require_even(u)
    _require_even(v)
    h = len(u) // 2
    return u[:h] + v + u[h:]


def ell(x: PairLetter | str, w: str) -> int:
    """Number of letters of ``phi(w)`` equal to ``x``."""
    x = PairLetter(x)
    _require_even(w)
    return kernels.ell_counts(w)[list(PairLetter).index(x)]


def ell_counts(w: str) -> dict[PairLetter, int]:
    _require_even(w)
    return dict(zip(PairLetter, kernels.ell_counts(w)))


def ct_pairs(w: str) -> int:
    """Matched ``(a, b)`` pairs at 1-indexed positions ``(i, j)`` with ``i + j = |w| + 1``."""
    _require_dyck(w)
    return kernels.ct_pairs(w)


def central_factorization(w: str) -> list[str]:
    """The unique list of centrally irreducible Dyck factors whose central product is ``w``.

    The pairing image of ``w`` is cut into the largest number of segments each
    of which maps back to a Dyck word. Greedy shortest-first cutting is wrong
    here because the generator images do not form a prefix code: ``abab`` is
    ``(ab)(ba)`` and cannot be cut after ``(ab)``.
    """
    _require_dyck(w)
    cuts = kernels.central_cuts(w)
    n = len(w)
    return [w[s:t] + w[n - t : n - s] for s, t in zip(cuts, cuts[1:])]


def ct_morphism(w: str) -> int:
    _require_dyck(w)
    return kernels.ct_morphism(w)


def enumerate_dyck(max_len: int) -> Iterator[str]:
    """All Dyck words of length ``<= max_len``, shortest first, lexicographic within a length."""
    if max_len < 0:
        raise InvalidArgument("max_len must be >= 0")
    for half in range(max_len // 2 + 1):
        yield from _dyck_of_half(half)


def _dyck_of_half(k: int) -> Iterator[str]:
    buf: list[str] = []

    def rec(opened: int, closed: int) -> Iterator[str]:
        if closed == k:
            yield "".join(buf)
            return
        if opened < k:
            buf.append("a")
            yield from rec(opened + 1, closed)
            buf.pop()
        if closed < opened:
            buf.append("b")
            yield from rec(opened, closed + 1)
            buf.pop()

    yield from rec(0, 0)


def enumerate_symmetric_dyck(max_len: int) -> list[str]:
    """Every symmetric Dyck word of length ``<= max_len``.

    A symmetric word is ``u + mirror(u)``, so free first halves are generated
    and filtered by the Dyck condition.
    """
    if max_len < 0 or max_len % 2:
        raise InvalidArgument("max_len must be a nonnegative even integer")
    out = []
    for half in range(max_len // 2 + 1):
        for letters in product("ab", repeat=half):
            u = "".join(letters)
            w = u + mirror(u)
            if kernels.is_dyck(w):
                out.append(w)
    return out


def format_central_image(pairs: Sequence[PairLetter]) -> str:
    return ",".join(p.value for p in pairs)


def parse_central_image(text: str) -> CentralImage:
    if not text:
        return ()
    try:
        return tuple(PairLetter(tok.strip()) for tok in text.split(","))
    except ValueError as exc:
        raise InvalidArgument(f"bad central image {text!r}") from exc
