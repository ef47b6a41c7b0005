"""Backend selection for the set-arithmetic kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used.  Setting ``PFINZ_PURE_PYTHON=1``
forces the fallback.  Both expose ``sumset``, ``sumset_merge``,
``sumset_bitset``, ``translate`` and ``negate``.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_impl = _pykernels if _ckernels is None or os.environ.get("PFINZ_PURE_PYTHON") == "1" else _ckernels

BACKEND = "python" if _impl is _pykernels else "cython"

sumset = _impl.sumset
sumset_merge = _impl.sumset_merge
sumset_bitset = _impl.sumset_bitset
translate = _impl.translate
negate = _impl.negate


def available_backends():
    """Map backend name to kernel module for every importable backend."""
    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    return backends
