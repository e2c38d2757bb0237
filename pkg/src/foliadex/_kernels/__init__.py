"""Kernel selection for the enumeration oracle.

The oracle sweeps enumerate millions of candidate polarizations, so the
inner loop exists twice: a Cython extension built at install time and a
pure-Python twin.  Selection happens once at import: the compiled module
is used when it imported cleanly and FOLIADEX_PURE=1 is not set.  Per
call there is one more escape hatch: inputs whose intermediate products
could overflow the compiled kernel's 64-bit arithmetic are routed to the
pure twin, which computes on arbitrary-precision integers.

Both twins share one signature and one contract (see oracle_py); nothing
outside this package may depend on which one runs.
"""

from __future__ import annotations

import os

from . import oracle_py

_compiled = None
if os.environ.get("FOLIADEX_PURE") != "1":
    try:
        from . import _oracle as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

# Conservative ceiling: the compiled kernel multiplies a value bounded by
# num_mag with one bounded by den_mag, and 2^62 leaves a factor-2 margin
# below the long long limit.
_PRODUCT_LIMIT = 1 << 62
_RANGE_LIMIT = 1 << 31


def backend() -> str:
    """Name of the kernel selected at import: "compiled" or "pure"."""
    return "pure" if _compiled is None else "compiled"


def _fits_compiled(beta_num, gamma_num, scale, m, b1, d_max, c_max) -> bool:
    if max(abs(beta_num), abs(gamma_num), scale, m, b1, d_max, c_max) >= _RANGE_LIMIT:
        return False
    num_mag = max(abs(beta_num), abs(m * beta_num + gamma_num))
    den_mag = scale * (c_max + m * d_max)
    return num_mag * den_mag < _PRODUCT_LIMIT


def best_index_bound(
    beta_num: int,
    gamma_num: int,
    scale: int,
    m: int,
    b1: int,
    d_max: int,
    c_max: int,
) -> tuple[int, int, int, int]:
    args = (beta_num, gamma_num, scale, m, b1, d_max, c_max)
    if _compiled is not None and _fits_compiled(*args):
        return _compiled.best_index_bound(*args)
    return oracle_py.best_index_bound(*args)
