from fractions import Fraction

import pytest

from dyckdiv import _accel, _pykernels
from dyckdiv.exactnum import make_lambda

IMPLS = [_pykernels]
if _accel.HAVE_EXTENSION:
    from dyckdiv import _ckernels

    IMPLS.append(_ckernels)

LAMBDAS = [(3, 2), (2, 1), (5, 2), (3, 1), (7, 3)]


@pytest.fixture(params=IMPLS, ids=lambda m: m.IMPLEMENTATION)
def impl(request):
    return request.param


@pytest.fixture(params=LAMBDAS, ids=lambda pq: f"{pq[0]}/{pq[1]}")
def lam(request):
    return make_lambda(*request.param)


def naive_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def naive_encode(n, lam):
    """Sorted symmetric difference built from Fraction sets; shares no code with the encoder."""
    scale = Fraction(lam.num, lam.den)
    divs = {Fraction(d) for d in naive_divisors(n)}
    scaled = {scale * d for d in divs}
    return "".join("a" if u in divs else "b" for u in sorted(divs ^ scaled))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if len(test_acceptance.RESULTS) > 1:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
