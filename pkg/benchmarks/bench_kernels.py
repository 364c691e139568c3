"""Time the compiled kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py --nmax 20000
"""
import argparse
import time

from dyckdiv import _pykernels
from dyckdiv.encoder import divisor_table

try:
    from dyckdiv import _ckernels
except ImportError:
    _ckernels = None


def bench_encode(k, table, p, q):
    for n, divs in enumerate(table, start=1):
        k.encode_word(n, divs, p, q)


def bench_word_stats(k, words):
    for w in words:
        k.height(w)
        k.omega(w)
        k.ct_pairs(w)
        k.ell_counts(w)


def bench_ct_morphism(k, words):
    for w in words:
        k.ct_morphism(w)


def bench_divisor_oracles(k, table, p, q):
    for n, divs in enumerate(table, start=1):
        k.middle_count(n, divs, p, q)
        k.blocks_count(divs, p, q)
        k.max_chain(divs, p, q)
        k.ell_ab_divisor_count(n, divs, p, q)


def bench_pythagorean(k, nmax):
    for n in range(1, nmax + 1):
        k.is_pythagorean_semiperimeter(n)


def bench_trapezoidal(k, nmax):
    for n in range(1, nmax + 1):
        k.is_even_trapezoidal(n)


def bench_divisors(k, nmax):
    for n in range(1, nmax + 1):
        k.divisors(n)


def timed(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=20_000)
    ap.add_argument("--pyth-nmax", type=int, default=2_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    table = divisor_table(1, args.nmax)
    words = [_pykernels.encode_word(n, d, 2, 1) for n, d in enumerate(table, start=1)]
    cases = [
        ("divisors (trial division)", bench_divisors, (args.nmax,)),
        ("encode, lambda=3/2", bench_encode, (table, 3, 2)),
        ("word stats", bench_word_stats, (words,)),
        ("ct via central factorization", bench_ct_morphism, (words,)),
        ("divisor oracles, lambda=3/2", bench_divisor_oracles, (table, 3, 2)),
        ("pythagorean search", bench_pythagorean, (args.pyth_nmax,)),
        ("even-trapezoidal search", bench_trapezoidal, (args.nmax,)),
    ]
    impls = [_pykernels] + ([_ckernels] if _ckernels is not None else [])
    print(f"nmax={args.nmax}  pyth-nmax={args.pyth_nmax}  best of {args.repeat}")
    print(f"{'kernel':32s}" + "".join(f"{m.IMPLEMENTATION:>12s}" for m in impls) + ("     speedup" if len(impls) > 1 else ""))
    for name, fn, fargs in cases:
        times = [timed(fn, m, *fargs, repeat=args.repeat) for m in impls]
        row = f"{name:32s}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)
    if _ckernels is None:
        print("compiled kernels not built; only the Python column is shown")


if __name__ == "__main__":
    main()
