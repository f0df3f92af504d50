"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the numpy
fallback. Setting ``DONOGHUE_PURE_PYTHON=1`` forces the fallback.
"""

import os

from donoghue import _pykernels

BACKENDS = {"python": _pykernels}

try:
    from donoghue import _ckernels
except ImportError:  # extension not built
    _ckernels = None
else:
    BACKENDS["cython"] = _ckernels

if _ckernels is not None and os.environ.get("DONOGHUE_PURE_PYTHON", "") in ("", "0"):
    BACKEND = "cython"
else:
    BACKEND = "python"

kernels = BACKENDS[BACKEND]


def get_backend(name):
    try:
        return BACKENDS[name]
    except KeyError:
        raise LookupError(f"kernel backend {name!r} is not available") from None
