"""Kernel backend selection.

The compiled module is used when it was built; set ``CIRCBOOK_PURE=1`` to
force the pure-Python twin.
"""
import os

from . import _pykernels

if os.environ.get("CIRCBOOK_PURE") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"
FOUND, INFEASIBLE, LIMIT = _pykernels.FOUND, _pykernels.INFEASIBLE, _pykernels.LIMIT

conflict_adjacency = _impl.conflict_adjacency
kcolor = _impl.kcolor
oracle_min_pages = _impl.oracle_min_pages
