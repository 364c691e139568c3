"""Select the compiled kernels when present, else the pure-Python ones.

Set ``DYCKDIV_PURE_PYTHON=1`` to force the fallback. Calls whose integer
products could exceed a signed 64-bit word are always served by the Python
kernels, which use arbitrary-precision integers.
"""
from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("DYCKDIV_PURE_PYTHON"):
    _ck = None
else:
    try:
        from . import _ckernels as _ck
    except ImportError:
        _ck = None

kernels = _ck if _ck is not None else _pykernels
HAVE_EXTENSION = _ck is not None
IMPLEMENTATION = kernels.IMPLEMENTATION

# every kernel product is bounded by 4 * n * n * max(p, q)
_SAFE = 1 << 60


def fits(n: int, p: int = 1, q: int = 1) -> bool:
    return 4 * n * n * max(p, q) < _SAFE


def pick(n: int, p: int = 1, q: int = 1):
    """Kernel module safe for inputs bounded by ``n`` and lambda ``p/q``."""
    if kernels is _pykernels or fits(n, p, q):
        return kernels
    return _pykernels

