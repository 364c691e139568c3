"""Exhaustive verification of the divisor/word identities and theorems over finite ranges.

Every sweep returns a :class:`VerificationReport`. Failures are data: they are
collected (up to a cap) rather than raised. Ranges are split into contiguous
chunks that may run in worker processes; results are merged in ``n`` order so
a report never depends on the worker count.
"""
from __future__ import annotations

import enum
import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import _accel, dyckcore, oracles
from ._accel import kernels
from .encoder import divisor_table, encode_with_divisors
from .errors import InvalidArgument
from .exactnum import Rational, make_lambda

__all__ = [
    "LanguageKind",
    "LanguageSpec",
    "Predicate",
    "Counterexample",
    "VerificationReport",
    "lang_member",
    "check_lemma_suite",
    "verify_hoft",
    "verify_pow2_trapezoid",
    "verify_pow2_dense",
    "check_characterization",
    "check_language_equality",
    "run_characterizations",
    "run_language_checks",
    "predicate_holds",
    "DEFAULT_MAX_COUNTEREXAMPLES",
]

DEFAULT_MAX_COUNTEREXAMPLES = 10
MAX_ENUMERATION_LEN = 24


class LanguageKind(enum.Enum):
    SINGLETON_AB = "SINGLETON_AB"
    AB_STAR = "AB_STAR"
    A_K_B_K = "A_K_B_K"
    IRREDUCIBLE_DYCK = "IRREDUCIBLE_DYCK"
    CT_POSITIVE = "CT_POSITIVE"
    OMEGA_ODD = "OMEGA_ODD"
    SYMMETRIC_DYCK = "SYMMETRIC_DYCK"


@dataclass(frozen=True)
class LanguageSpec:
    """A single language kind or the intersection of two."""

    kinds: tuple[LanguageKind, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.kinds) <= 2:
            raise InvalidArgument("a language spec intersects one or two kinds")

    @classmethod
    def of(cls, *kinds: LanguageKind | str) -> LanguageSpec:
        return cls(tuple(LanguageKind(k) for k in kinds))

    @classmethod
    def parse(cls, text: str) -> LanguageSpec:
        """Parse ``"KIND"`` or ``"KIND&KIND"``."""
        try:
            return cls.of(*(tok.strip().upper() for tok in text.split("&")))
        except ValueError as exc:
            raise InvalidArgument(f"unknown language {text!r}") from exc

    def __str__(self) -> str:
        return "&".join(k.value for k in self.kinds)


def _member_kind(kind: LanguageKind, w: str) -> bool:
    if kind is LanguageKind.SINGLETON_AB:
        return w == "ab"
    if kind is LanguageKind.AB_STAR:
        return len(w) % 2 == 0 and w == "ab" * (len(w) // 2)
    if kind is LanguageKind.A_K_B_K:
        k = len(w) // 2
        return k >= 1 and w == "a" * k + "b" * k
    if kind is LanguageKind.SYMMETRIC_DYCK:
        return kernels.is_symmetric_dyck(w)
    if not kernels.is_dyck(w):
        return False
    if kind is LanguageKind.IRREDUCIBLE_DYCK:
        return kernels.omega(w) == 1
    if kind is LanguageKind.CT_POSITIVE:
        return kernels.ct_pairs(w) > 0
    if kind is LanguageKind.OMEGA_ODD:
        return kernels.omega(w) % 2 == 1
    raise AssertionError(kind)


def lang_member(spec: LanguageSpec, w: str) -> bool:
    if not isinstance(w, str) or w.strip("ab"):
        return False
    return all(_member_kind(k, w) for k in spec.kinds)


class Predicate(enum.Enum):
    MIDDLE_POSITIVE = "MIDDLE_POSITIVE"
    BLOCKS_ODD = "BLOCKS_ODD"
    POWER_OF_TWO = "POWER_OF_TWO"
    NOT_TRAPEZOIDAL = "NOT_TRAPEZOIDAL"
    NOT_PYTH = "NOT_PYTH"
    DENSELY_DIVISIBLE = "DENSELY_DIVISIBLE"

    @classmethod
    def parse(cls, text: str) -> Predicate:
        try:
            return cls(text.strip().upper().replace("-", "_"))
        except ValueError as exc:
            raise InvalidArgument(f"unknown predicate {text!r}") from exc


def predicate_holds(
    pred: Predicate,
    n: int,
    lam: Rational,
    divs: list[int] | None = None,
    pyth_flags: bytearray | None = None,
) -> bool:
    if pred is Predicate.MIDDLE_POSITIVE:
        return oracles.middle_count(n, lam, divs) > 0
    if pred is Predicate.BLOCKS_ODD:
        return oracles.blocks_count(n, lam, divs) % 2 == 1
    if pred is Predicate.DENSELY_DIVISIBLE:
        return oracles.is_densely_divisible(n, lam, divs)
    if pred is Predicate.POWER_OF_TWO:
        return oracles.is_power_of_two(n, divs)
    if pred is Predicate.NOT_TRAPEZOIDAL:
        return not oracles.is_even_trapezoidal(n)
    if pred is Predicate.NOT_PYTH:
        if pyth_flags is not None:
            return not pyth_flags[n]
        return not oracles.is_pythagorean_semiperimeter(n)
    raise AssertionError(pred)


@dataclass(frozen=True)
class Counterexample:
    n: int | None
    check: str
    expected: str
    actual: str
    word: str | None = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "check": self.check,
            "expected": self.expected,
            "actual": self.actual,
            "word": self.word,
        }


@dataclass
class VerificationReport:
    theorem: str
    lam: Rational | None
    n_range: tuple[int, int]
    checked: int = 0
    failures: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0
    members: list[int] | None = None
    expect_pass: bool = True

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    @property
    def as_expected(self) -> bool:
        return self.passed == self.expect_pass

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "lambda": None if self.lam is None else str(self.lam),
            "range": list(self.n_range),
            "checked": self.checked,
            "status": self.status,
            "expected": "PASS" if self.expect_pass else "FAIL",
            "failures": self.failures,
            "counterexamples": [c.to_json() for c in self.counterexamples],
        }
        if self.members is not None:
            out["members"] = self.members
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000.0, 3)
        return out

    def summary(self) -> str:
        lam = "" if self.lam is None else f" lambda={self.lam}"
        lo, hi = self.n_range
        line = f"{self.theorem}{lam} [{lo}, {hi}]: {self.status} ({self.checked} checked, {self.failures} failures)"
        for c in self.counterexamples:
            where = f"n={c.n}" if c.n is not None else f"word={c.word!r}"
            line += f"\n  {where} {c.check}: expected {c.expected}, got {c.actual}"
        return line


# --- chunked sweeps -------------------------------------------------------


@dataclass
class _Chunk:
    checked: int = 0
    failures: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    members: list[int] = field(default_factory=list)

    def fail(self, cap: int, cx: Counterexample) -> None:
        self.failures += 1
        if len(self.counterexamples) < cap:
            self.counterexamples.append(cx)


def _chunk_lemmas(lam: Rational, lo: int, hi: int, cap: int, extra) -> _Chunk:
    k = _accel.pick(hi, lam.num, lam.den)
    out = _Chunk()
    for n, divs in zip(range(lo, hi + 1), divisor_table(lo, hi)):
        out.checked += 1
        w = k.encode_word(n, divs, lam.num, lam.den)
        if not w or not kernels.is_symmetric_dyck(w):
            out.fail(cap, Counterexample(n, "symmetric_dyck", "True", "False", w))
            continue
        pairs = [
            ("ct=middle", kernels.ct_pairs(w), oracles.middle_count(n, lam, divs)),
            ("omega=blocks", kernels.omega(w), oracles.blocks_count(n, lam, divs)),
            ("height=max_chain", kernels.height(w), oracles.max_chain(n, lam, divs)),
            ("ell_ab=windowed_divisors", kernels.ell_counts(w)[1], oracles.windowed_divisor_count(n, lam, divs)),
        ]
        for name, actual, expected in pairs:
            if actual != expected:
                out.fail(cap, Counterexample(n, name, str(expected), str(actual), w))
    return out


def _chunk_hoft(lam: Rational, lo: int, hi: int, cap: int, extra) -> _Chunk:
    out = _Chunk()
    for n, divs in zip(range(lo, hi + 1), divisor_table(lo, hi)):
        out.checked += 1
        middle_pos = oracles.middle_count(n, lam, divs) > 0
        blocks_odd = oracles.blocks_count(n, lam, divs) % 2 == 1
        oracle_ok = middle_pos == blocks_odd
        w = encode_with_divisors(n, divs, lam)
        ct_pos = kernels.ct_pairs(w) > 0
        omega_odd = kernels.omega(w) % 2 == 1
        word_ok = ct_pos == omega_odd
        if not oracle_ok:
            out.fail(cap, Counterexample(n, "oracle", f"middle>0={blocks_odd}", f"middle>0={middle_pos}", w))
        if not word_ok:
            out.fail(cap, Counterexample(n, "word", f"ct>0={omega_odd}", f"ct>0={ct_pos}", w))
        if oracle_ok != word_ok:
            out.fail(cap, Counterexample(n, "routes", f"oracle_ok={oracle_ok}", f"word_ok={word_ok}", w))
    return out


def _chunk_pow2(lam: Rational, lo: int, hi: int, cap: int, extra) -> _Chunk:
    mode = extra
    flags = oracles.pythagorean_semiperimeter_flags(hi)
    out = _Chunk()
    for n, divs in zip(range(lo, hi + 1), divisor_table(lo, hi)):
        out.checked += 1
        lhs = oracles.is_power_of_two(n, divs)
        if mode == "trapezoid":
            rhs = not oracles.is_even_trapezoidal(n) and not flags[n]
        else:
            rhs = oracles.is_densely_divisible(n, Rational(2), divs) and not flags[n]
        if rhs:
            out.members.append(n)
        if lhs != rhs:
            out.fail(cap, Counterexample(n, "equivalence", f"rhs={lhs}", f"rhs={rhs}"))
    return out


def _chunk_characterization(lam: Rational, lo: int, hi: int, cap: int, extra) -> _Chunk:
    pred, spec = extra
    flags = oracles.pythagorean_semiperimeter_flags(hi) if pred is Predicate.NOT_PYTH else None
    out = _Chunk()
    for n, divs in zip(range(lo, hi + 1), divisor_table(lo, hi)):
        out.checked += 1
        w = encode_with_divisors(n, divs, lam)
        expected = predicate_holds(pred, n, lam, divs, flags)
        actual = lang_member(spec, w)
        if expected != actual:
            out.fail(cap, Counterexample(n, f"{pred.value}<->{spec}", str(expected), str(actual), w))
    return out


_TASKS: dict[str, Callable] = {
    "lemmas": _chunk_lemmas,
    "hoft": _chunk_hoft,
    "pow2": _chunk_pow2,
    "characterization": _chunk_characterization,
}


def _run_chunk(args) -> _Chunk:
    task, lam, lo, hi, cap, extra = args
    return _TASKS[task](lam, lo, hi, cap, extra)


def _split(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    size = hi - lo + 1
    parts = max(1, min(parts, size))
    step, rem = divmod(size, parts)
    out = []
    start = lo
    for i in range(parts):
        end = start + step + (1 if i < rem else 0) - 1
        out.append((start, end))
        start = end + 1
    return out


def _check_range(lo: int, hi: int) -> None:
    if not (isinstance(lo, int) and isinstance(hi, int)) or lo < 1 or hi < lo:
        raise InvalidArgument(f"bad range [{lo}, {hi}]")


def _sweep(
    theorem: str,
    task: str,
    lam: Rational | None,
    lo: int,
    hi: int,
    *,
    extra=None,
    jobs: int = 1,
    max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES,
    collect_members: bool = False,
    progress: Callable[[int, int], None] | None = None,
) -> VerificationReport:
    _check_range(lo, hi)
    if jobs < 1:
        raise InvalidArgument("jobs must be >= 1")
    t0 = time.perf_counter()
    # chunks are contiguous and merged in order, so the report is the same for any split
    chunks = _split(lo, hi, max(1, jobs) * 4 if jobs > 1 else 1)
    args = [(task, lam if lam is not None else Rational(2), a, b, max_counterexamples, extra) for a, b in chunks]
    results: list[_Chunk] = []
    if jobs == 1:
        for a in args:
            results.append(_run_chunk(a))
            if progress:
                progress(a[3] - lo + 1, hi - lo + 1)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for a, r in zip(args, pool.map(_run_chunk, args)):
                results.append(r)
                if progress:
                    progress(a[3] - lo + 1, hi - lo + 1)
    report = VerificationReport(theorem, lam, (lo, hi))
    for r in results:
        report.checked += r.checked
        report.failures += r.failures
        room = max_counterexamples - len(report.counterexamples)
        report.counterexamples.extend(r.counterexamples[: max(room, 0)])
    if collect_members:
        report.members = [m for r in results for m in r.members]
    report.elapsed = time.perf_counter() - t0
    assert report.checked == hi - lo + 1
    return report


def check_lemma_suite(lam: Rational, n_lo: int, n_hi: int, **kw) -> VerificationReport:
    """Symmetric Dyck shape plus the four statistic identities, for every ``n`` in range.

    ``ct = middle``, ``omega = blocks``, ``height = max_chain`` and
    ``ell_ab = windowed divisor count``, all at the same ``lam``.
    """
    return _sweep("lemmas", "lemmas", lam, n_lo, n_hi, **kw)


def verify_hoft(lam: Rational, n_lo: int, n_hi: int, **kw) -> VerificationReport:
    """``middle > 0`` iff ``blocks`` odd, checked on oracles and on words separately."""
    return _sweep("hoft", "hoft", lam, n_lo, n_hi, **kw)


def verify_pow2_trapezoid(n_lo: int, n_hi: int, **kw) -> VerificationReport:
    """Powers of two are exactly the integers that are neither even-trapezoidal nor Pythagorean semi-perimeters."""
    return _sweep("pow2-trapezoid", "pow2", None, n_lo, n_hi, extra="trapezoid", collect_members=True, **kw)


def verify_pow2_dense(n_lo: int, n_hi: int, **kw) -> VerificationReport:
    """Powers of two are exactly the 2-densely divisible integers that are not Pythagorean semi-perimeters."""
    return _sweep("pow2-dense", "pow2", None, n_lo, n_hi, extra="dense", collect_members=True, **kw)


def check_characterization(
    pred: Predicate | str, spec: LanguageSpec | str, lam: Rational, n_max: int, **kw
) -> VerificationReport:
    """``pred(n)`` iff ``encode(n, lam)`` lies in ``spec``, for all ``n <= n_max``.

    Passing means the set cut out by ``pred`` is, on this range, a union of
    fibres of the encoding.
    """
    pred = pred if isinstance(pred, Predicate) else Predicate.parse(pred)
    spec = spec if isinstance(spec, LanguageSpec) else LanguageSpec.parse(spec)
    name = f"characterization:{pred.value}<->{spec}"
    return _sweep(name, "characterization", lam, 1, n_max, extra=(pred, spec), **kw)


def check_language_equality(
    spec_a: LanguageSpec | str,
    spec_b: LanguageSpec | str,
    max_len: int,
    symmetric_only: bool,
    *,
    max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES,
    expect_pass: bool = True,
) -> VerificationReport:
    """Compare two languages on every Dyck word (or symmetric Dyck word) up to ``max_len``.

    The report range is ``[0, max_len]`` in word length; ``checked`` counts words.
    """
    spec_a = spec_a if isinstance(spec_a, LanguageSpec) else LanguageSpec.parse(spec_a)
    spec_b = spec_b if isinstance(spec_b, LanguageSpec) else LanguageSpec.parse(spec_b)
    if max_len < 0 or max_len % 2 or max_len > MAX_ENUMERATION_LEN:
        raise InvalidArgument(f"max_len must be even and in [0, {MAX_ENUMERATION_LEN}]")
    t0 = time.perf_counter()
    scope = "sym" if symmetric_only else "dyck"
    report = VerificationReport(
        f"language:{spec_a}=={spec_b}@{scope}", None, (0, max_len), expect_pass=expect_pass
    )
    words = dyckcore.enumerate_symmetric_dyck(max_len) if symmetric_only else dyckcore.enumerate_dyck(max_len)
    for w in words:
        report.checked += 1
        in_a = lang_member(spec_a, w)
        in_b = lang_member(spec_b, w)
        if in_a != in_b:
            report.failures += 1
            if len(report.counterexamples) < max_counterexamples:
                report.counterexamples.append(
                    Counterexample(None, f"{spec_a}=={spec_b}", f"{spec_b}={in_b}", f"{spec_a}={in_a}", w)
                )
    report.elapsed = time.perf_counter() - t0
    return report


# (predicate, language, lambda) triples whose equivalence is a theorem
_KR2_CHARACTERIZATIONS = [
    (Predicate.POWER_OF_TWO, LanguageSpec.of("SINGLETON_AB")),
    (Predicate.NOT_PYTH, LanguageSpec.of("AB_STAR")),
    (Predicate.NOT_TRAPEZOIDAL, LanguageSpec.of("A_K_B_K")),
]
_GENERAL_CHARACTERIZATIONS = [
    (Predicate.MIDDLE_POSITIVE, LanguageSpec.of("CT_POSITIVE")),
    (Predicate.BLOCKS_ODD, LanguageSpec.of("OMEGA_ODD")),
    (Predicate.DENSELY_DIVISIBLE, LanguageSpec.of("IRREDUCIBLE_DYCK")),
]


def run_characterizations(lam: Rational, n_max: int, **kw) -> list[VerificationReport]:
    """The three scale-2 characterizations, then the three that hold at every ``lam``."""
    two = make_lambda(2)
    reports = [check_characterization(p, s, two, n_max, **kw) for p, s in _KR2_CHARACTERIZATIONS]
    reports += [check_characterization(p, s, lam, n_max, **kw) for p, s in _GENERAL_CHARACTERIZATIONS]
    return reports


def run_language_checks(max_len: int = 20, necessity_len: int = 8, **kw) -> list[VerificationReport]:
    """Language equalities used by the theorems, plus the search showing symmetry is needed.

    The last report is expected to FAIL: dropping the symmetry restriction must
    produce a counterexample to ``CT_POSITIVE == OMEGA_ODD``.
    """
    return [
        check_language_equality("CT_POSITIVE", "OMEGA_ODD", max_len, True, **kw),
        check_language_equality("A_K_B_K&AB_STAR", "SINGLETON_AB", max_len, False, **kw),
        check_language_equality("IRREDUCIBLE_DYCK&AB_STAR", "SINGLETON_AB", max_len, False, **kw),
        check_language_equality("CT_POSITIVE", "OMEGA_ODD", necessity_len, False, expect_pass=False, **kw),
    ]
