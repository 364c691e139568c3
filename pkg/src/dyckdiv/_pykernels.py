"""Pure-Python hot kernels.

Reference implementation of every inner loop. ``_ckernels.pyx`` mirrors these
signatures one for one; ``_accel`` picks whichever is available at import.

Conventions shared by both implementations:

* a scale factor lambda is passed as the coprime pair ``(p, q)`` with ``p > q``;
* ``divs`` is the increasing list of divisors of ``n``;
* words are ``str`` over ``"ab"`` and are assumed valid (callers validate).
"""
from __future__ import annotations

from math import isqrt

from .errors import EncodingInvariantError

IMPLEMENTATION = "python"


def divisors(n: int) -> list[int]:
    small = []
    large = []
    r = isqrt(n)
    for d in range(1, r + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    large.reverse()
    return small + large


def encode_word(n: int, divs: list[int], p: int, q: int) -> str:
    # d lies in lam*D_n iff q*d = p*e for a divisor e of n
    a_side = []
    for d in divs:
        qd = q * d
        if qd % p == 0 and n % (qd // p) == 0:
            continue
        a_side.append(d)
    # lam*e lies in D_n iff p*e/q is an integer dividing n
    b_side = []
    for e in divs:
        pe = p * e
        if pe % q == 0 and n % (pe // q) == 0:
            continue
        b_side.append(e)

    out = []
    i = j = 0
    na, nb = len(a_side), len(b_side)
    while i < na and j < nb:
        lhs = a_side[i] * q
        rhs = b_side[j] * p
        if lhs < rhs:
            out.append("a")
            i += 1
        elif lhs > rhs:
            out.append("b")
            j += 1
        else:
            raise EncodingInvariantError(f"tie in symmetric difference for n={n}")
    out.extend("a" * (na - i))
    out.extend("b" * (nb - j))
    return "".join(out)


def is_dyck(w: str) -> bool:
    h = 0
    for c in w:
        if c == "a":
            h += 1
        elif c == "b":
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def is_symmetric_dyck(w: str) -> bool:
    if not is_dyck(w):
        return False
    n = len(w)
    for k in range(n // 2):
        if w[k] == w[n - 1 - k]:
            return False
    return True


def height(w: str) -> int:
    h = best = 0
    for c in w:
        if c == "a":
            h += 1
            if h > best:
                best = h
        else:
            h -= 1
    return best


def omega(w: str) -> int:
    h = count = 0
    for c in w:
        if c == "a":
            h += 1
        else:
            h -= 1
            if h == 0:
                count += 1
    return count


def ct_pairs(w: str) -> int:
    target = len(w) - 1
    stack = []
    count = 0
    for j, c in enumerate(w):
        if c == "a":
            stack.append(j)
        else:
            i = stack.pop()
            if i + j == target:
                count += 1
    return count


def ell_counts(w: str) -> tuple[int, int, int, int]:
    """Counts of the pair letters ``(aa, ab, ba, bb)`` in the outside-in pairing."""
    aa = ab = ba = bb = 0
    n = len(w)
    for k in range(n // 2):
        x = w[k]
        y = w[n - 1 - k]
        if x == "a":
            if y == "a":
                aa += 1
            else:
                ab += 1
        elif y == "a":
            ba += 1
        else:
            bb += 1
    return aa, ab, ba, bb


def central_cuts(w: str) -> list[int]:
    """Boundaries ``0 = c0 < c1 < ... < ck = |w|/2`` of the central factorization.

    Segment ``[c_i, c_{i+1})`` of the pair sequence is one centrally
    irreducible Dyck factor. The split maximises the number of segments whose
    words are Dyck; freeness of the central monoid makes that split unique.
    """
    n = len(w)
    m = n // 2
    best = [-1] * (m + 1)
    nxt = [0] * (m + 1)
    best[m] = 0
    for i in range(m - 1, -1, -1):
        tu = 0  # total of the outer-left part w[i:j]
        tv = 0  # total of the outer-right part w[n-j:n-i]
        mpv = 0  # min prefix sum of the right part, empty prefix included
        top = -1
        arg = 0
        for j in range(i + 1, m + 1):
            tu += 1 if w[j - 1] == "a" else -1
            if tu < 0:
                break
            c = 1 if w[n - j] == "a" else -1
            tv += c
            mpv = min(0, c + mpv)
            if tu + tv == 0 and tu + mpv >= 0 and best[j] >= 0:
                cand = best[j] + 1
                if cand > top:
                    top = cand
                    arg = j
        best[i] = top
        nxt[i] = arg
    cuts = [0]
    i = 0
    while i < m:
        i = nxt[i]
        cuts.append(i)
    return cuts


def ct_morphism(w: str) -> int:
    cuts = central_cuts(w)
    n = len(w)
    count = 0
    for s, t in zip(cuts, cuts[1:]):
        if t - s == 1 and w[s] == "a" and w[n - 1 - s] == "b":
            count += 1
    return count


def middle_count(n: int, divs: list[int], p: int, q: int) -> int:
    count = 0
    for d in divs:
        d2 = d * d
        if n * q < d2 * p and d2 * q <= p * n:
            count += 1
    return count


def blocks_count(divs: list[int], p: int, q: int) -> int:
    # closed intervals [d, lam*d] touch when lam*d_i == d_{i+1}
    count = 1
    for i in range(len(divs) - 1):
        if p * divs[i] < q * divs[i + 1]:
            count += 1
    return count


def max_chain(divs: list[int], p: int, q: int) -> int:
    best = 0
    j = 0
    k = len(divs)
    for i in range(k):
        if j < i:
            j = i
        while j < k and q * divs[j] < p * divs[i]:
            j += 1
        if j - i > best:
            best = j - i
    return best


def ell_ab_divisor_count(n: int, divs: list[int], p: int, q: int) -> int:
    """#{d | n : d not in lam*D_n and d < sqrt(lam*n)}."""
    count = 0
    for d in divs:
        if d * d * q >= p * n:
            break
        qd = q * d
        if qd % p == 0 and n % (qd // p) == 0:
            continue
        count += 1
    return count


def is_pythagorean_semiperimeter(n: int) -> bool:
    # x <= y < z with x + y + z = 2n; for fixed x the Pythagorean relation
    # pins y = 2n(n - x) / (2n - x)
    two_n = 2 * n
    x = 1
    while 3 * x < two_n:
        num = two_n * (n - x)
        den = two_n - x
        if num % den == 0:
            y = num // den
            z = two_n - x - y
            if y >= x and z >= 1 and x * x + y * y == z * z:
                return True
        x += 1
    return False


def is_even_trapezoidal(n: int) -> bool:
    # n = m * (2a + 2m - 1) with a, m >= 1
    m = 1
    while m * (2 * m + 1) <= n:
        if n % m == 0:
            t = n // m
            if t % 2 == 1 and t >= 2 * m + 1:
                return True
        m += 1
    return False
