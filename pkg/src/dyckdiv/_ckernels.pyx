# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; signatures match ``_pykernels`` exactly.

All arithmetic is on signed 64-bit integers. ``_accel`` only routes calls here
when ``n * n * max(p, q)`` is known to fit, so nothing in this module can wrap.
"""
from libc.stdlib cimport malloc, free

from .errors import EncodingInvariantError

IMPLEMENTATION = "cython"

ctypedef long long i64


cdef i64* _to_array(list divs) except NULL:
    cdef Py_ssize_t k = len(divs)
    cdef i64* arr = <i64*>malloc((k + 1) * sizeof(i64))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(k):
        arr[i] = divs[i]
    return arr


def divisors(i64 n):
    cdef list small = []
    cdef list large = []
    cdef i64 d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


def encode_word(i64 n, list divs, i64 p, i64 q):
    cdef Py_ssize_t k = len(divs)
    cdef i64* ds = _to_array(divs)
    cdef i64* a_side = <i64*>malloc((k + 1) * sizeof(i64))
    cdef i64* b_side = <i64*>malloc((k + 1) * sizeof(i64))
    cdef char* out = <char*>malloc(2 * k + 1)
    cdef Py_ssize_t na = 0, nb = 0, i, j, pos = 0
    cdef i64 d, t, lhs, rhs
    try:
        if a_side == NULL or b_side == NULL or out == NULL:
            raise MemoryError()
        for i in range(k):
            d = ds[i]
            t = q * d
            if t % p == 0 and n % (t // p) == 0:
                continue
            a_side[na] = d
            na += 1
        for i in range(k):
            d = ds[i]
            t = p * d
            if t % q == 0 and n % (t // q) == 0:
                continue
            b_side[nb] = d
            nb += 1
        i = 0
        j = 0
        while i < na and j < nb:
            lhs = a_side[i] * q
            rhs = b_side[j] * p
            if lhs < rhs:
                out[pos] = 97
                i += 1
            elif lhs > rhs:
                out[pos] = 98
                j += 1
            else:
                raise EncodingInvariantError(f"tie in symmetric difference for n={n}")
            pos += 1
        while i < na:
            out[pos] = 97
            pos += 1
            i += 1
        while j < nb:
            out[pos] = 98
            pos += 1
            j += 1
        return out[:pos].decode("ascii")
    finally:
        free(ds)
        free(a_side)
        free(b_side)
        free(out)


def is_dyck(str w):
    cdef bytes bw = w.encode("ascii", "replace")
    cdef const char* s = bw
    cdef Py_ssize_t i, n = len(bw)
    cdef i64 h = 0
    for i in range(n):
        if s[i] == 97:
            h += 1
        elif s[i] == 98:
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def is_symmetric_dyck(str w):
    if not is_dyck(w):
        return False
    cdef bytes bw = w.encode("ascii")
    cdef const char* s = bw
    cdef Py_ssize_t k, n = len(bw)
    for k in range(n // 2):
        if s[k] == s[n - 1 - k]:
            return False
    return True


def height(str w):
    cdef bytes bw = w.encode("ascii")
    cdef const char* s = bw
    cdef Py_ssize_t i, n = len(bw)
    cdef i64 h = 0, best = 0
    for i in range(n):
        if s[i] == 97:
            h += 1
            if h > best:
                best = h
        else:
            h -= 1
    return best


def omega(str w):
    cdef bytes bw = w.encode("ascii")
    cdef const char* s = bw
    cdef Py_ssize_t i, n = len(bw)
    cdef i64 h = 0, count = 0
    for i in range(n):
        if s[i] == 97:
            h += 1
        else:
            h -= 1
            if h == 0:
                count += 1
    return count


def ct_pairs(str w):
    cdef bytes bw = w.encode("ascii")
    cdef const char* s = bw
    cdef Py_ssize_t n = len(bw)
    cdef Py_ssize_t* stack = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
    if stack == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = 0, i, j
    cdef i64 count = 0
    for j in range(n):
        if s[j] == 97:
            stack[top] = j
            top += 1
        else:
            top -= 1
            i = stack[top]
            if i + j == n - 1:
                count += 1
    free(stack)
    return count


def ell_counts(str w):
    cdef bytes bw = w.encode("ascii")
    cdef const char* s = bw
    cdef Py_ssize_t k, n = len(bw)
    cdef i64 aa = 0, ab = 0, ba = 0, bb = 0
    for k in range(n // 2):
        if s[k] == 97:
            if s[n - 1 - k] == 97:
                aa += 1
            else:
                ab += 1
        elif s[n - 1 - k] == 97:
            ba += 1
        else:
            bb += 1
    return aa, ab, ba, bb


def central_cuts(str w):
    cdef bytes bw = w.encode("ascii")
    cdef const char* s = bw
    cdef Py_ssize_t n = len(bw)
    cdef Py_ssize_t m = n // 2
    cdef Py_ssize_t* best = <Py_ssize_t*>malloc((m + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* nxt = <Py_ssize_t*>malloc((m + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t i, j, top, arg, cand
    cdef i64 tu, tv, mpv, c
    cdef list cuts
    if best == NULL or nxt == NULL:
        free(best)
        free(nxt)
        raise MemoryError()
    try:
        best[m] = 0
        nxt[m] = m
        i = m - 1
        while i >= 0:
            tu = 0
            tv = 0
            mpv = 0
            top = -1
            arg = 0
            for j in range(i + 1, m + 1):
                tu += 1 if s[j - 1] == 97 else -1
                if tu < 0:
                    break
                c = 1 if s[n - j] == 97 else -1
                tv += c
                mpv = c + mpv
                if mpv > 0:
                    mpv = 0
                if tu + tv == 0 and tu + mpv >= 0 and best[j] >= 0:
                    cand = best[j] + 1
                    if cand > top:
                        top = cand
                        arg = j
            best[i] = top
            nxt[i] = arg
            i -= 1
        cuts = [0]
        i = 0
        while i < m:
            i = nxt[i]
            cuts.append(i)
        return cuts
    finally:
        free(best)
        free(nxt)


def ct_morphism(str w):
    cdef list cuts = central_cuts(w)
    cdef Py_ssize_t n = len(w)
    cdef Py_ssize_t idx, a, b
    cdef i64 count = 0
    for idx in range(len(cuts) - 1):
        a = cuts[idx]
        b = cuts[idx + 1]
        if b - a == 1 and w[a] == "a" and w[n - 1 - a] == "b":
            count += 1
    return count


def middle_count(i64 n, list divs, i64 p, i64 q):
    cdef Py_ssize_t i, k = len(divs)
    cdef i64 d, d2, count = 0
    for i in range(k):
        d = divs[i]
        d2 = d * d
        if n * q < d2 * p and d2 * q <= p * n:
            count += 1
    return count


def blocks_count(list divs, i64 p, i64 q):
    cdef Py_ssize_t k = len(divs)
    cdef i64* ds = _to_array(divs)
    cdef Py_ssize_t i
    cdef i64 count = 1
    for i in range(k - 1):
        if p * ds[i] < q * ds[i + 1]:
            count += 1
    free(ds)
    return count


def max_chain(list divs, i64 p, i64 q):
    cdef Py_ssize_t k = len(divs)
    cdef i64* ds = _to_array(divs)
    cdef Py_ssize_t i, j = 0, best = 0
    for i in range(k):
        if j < i:
            j = i
        while j < k and q * ds[j] < p * ds[i]:
            j += 1
        if j - i > best:
            best = j - i
    free(ds)
    return best


def ell_ab_divisor_count(i64 n, list divs, i64 p, i64 q):
    cdef Py_ssize_t i, k = len(divs)
    cdef i64 d, t, count = 0
    for i in range(k):
        d = divs[i]
        if d * d * q >= p * n:
            break
        t = q * d
        if t % p == 0 and n % (t // p) == 0:
            continue
        count += 1
    return count


def is_pythagorean_semiperimeter(i64 n):
    cdef i64 two_n = 2 * n
    cdef i64 x = 1, num, den, y, z
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


def is_even_trapezoidal(i64 n):
    cdef i64 m = 1, t
    while m * (2 * m + 1) <= n:
        if n % m == 0:
            t = n // m
            if t % 2 == 1 and t >= 2 * m + 1:
                return True
        m += 1
    return False
