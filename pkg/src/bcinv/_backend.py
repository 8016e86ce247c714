"""Kernel backend selection.

The compiled extension bcinv._core accelerates the hot loops for word-sized
moduli.  It is optional: if missing (or BCINV_PURE is set) everything runs
on the pure-Python twins in bcinv._kernels_py.  Both backends implement the
same exact integer algorithms, so results are bit-identical either way.
"""

import os

from . import _kernels_py as _py

_core = None
if not os.environ.get("BCINV_PURE"):
    try:
        from . import _core  # type: ignore[no-redef]
    except ImportError:
        _core = None

BACKEND = "c" if _core is not None else "python"

# The compiled kernels work on C integers; anything larger is routed to the
# pure twins.  Coefficients live in [0, p), so bounding p bounds them all.
_P_MAX = (1 << 31) - 1
_QUAD_MAX = 1 << 60

trim = _py.trim


def pmod_mul(a, b, p):
    if _core is not None and p <= _P_MAX:
        return _core.pmod_mul(a, b, p)
    return _py.pmod_mul(a, b, p)


def pmod_divmod(a, b, p):
    if _core is not None and p <= _P_MAX:
        return _core.pmod_divmod(a, b, p)
    return _py.pmod_divmod(a, b, p)


def pmod_rem(a, b, p):
    if _core is not None and p <= _P_MAX:
        return _core.pmod_rem(a, b, p)
    return _py.pmod_rem(a, b, p)


def pmod_gcd(a, b, p):
    if _core is not None and p <= _P_MAX:
        return _core.pmod_gcd(a, b, p)
    return _py.pmod_gcd(a, b, p)


def pmod_mulmod(a, b, mod, p):
    if _core is not None and p <= _P_MAX:
        return _core.pmod_mulmod(a, b, mod, p)
    return _py.pmod_mulmod(a, b, mod, p)


def pmod_powmod(base, e, mod, p):
    if _core is not None and p <= _P_MAX:
        return _core.pmod_powmod(base, e, mod, p)
    return _py.pmod_powmod(base, e, mod, p)


def quad_gen_search_imag(B, C, n, la, lb, lc):
    if _core is not None and 0 <= n <= _QUAD_MAX and abs(B) < 64 and abs(C) < 4096:
        return _core.quad_gen_search_imag(B, C, n, la, lb, lc)
    return _py.quad_gen_search_imag(B, C, n, la, lb, lc)
