"""Select the polynomial kernel at import time.

The compiled Cython kernel is preferred when its extension module built;
otherwise (or when QSK_PURE_KERNEL=1 is set) the pure-Python twin is used.
Both expose the same eight functions over the same monomial encoding.
"""

import os

from . import pure

if os.environ.get("QSK_PURE_KERNEL") == "1":
    _impl = pure
    KERNEL = "pure"
else:
    try:
        from . import cyk as _impl  # type: ignore[no-redef]

        KERNEL = "cyk"
    except ImportError:
        _impl = pure
        KERNEL = "pure"

padd = _impl.padd
psub = _impl.psub
pscale = _impl.pscale
pmul = _impl.pmul
mono_mul = _impl.mono_mul
pswap = _impl.pswap
pdivdiff = _impl.pdivdiff
plinear_div = _impl.plinear_div

__all__ = [
    "KERNEL",
    "mono_mul",
    "padd",
    "pdivdiff",
    "plinear_div",
    "pmul",
    "pscale",
    "pswap",
    "psub",
    "pure",
]
