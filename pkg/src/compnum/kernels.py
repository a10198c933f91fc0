"""Select the bitmask kernel backend at import time.

The compiled ``_ckernels`` module is used when it imports; setting
``COMPNUM_PURE_PYTHON=1`` forces the pure-Python implementation.  Inputs
beyond the compiled limits are always routed to pure Python.
"""

import os

from . import _pykernels

FEASIBLE = _pykernels.FEASIBLE
INFEASIBLE = _pykernels.INFEASIBLE
EXHAUSTED = _pykernels.EXHAUSTED

_compiled = None
if not os.environ.get("COMPNUM_PURE_PYTHON"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def backends():
    """Mapping of available backend name to module."""
    out = {"python": _pykernels}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def chordless_cycles(adj, cap):
    if _compiled is not None and len(adj) <= 64:
        return _compiled.chordless_cycles(adj, cap)
    return _pykernels.chordless_cycles(adj, cap)


def maximal_cliques(adj):
    if _compiled is not None and len(adj) <= 64:
        return _compiled.maximal_cliques(adj)
    return _pykernels.maximal_cliques(adj)


def competition_search(adj, k, node_limit):
    if (_compiled is not None and len(adj) <= _compiled.MAX_SEARCH_VERTICES
            and sum(bin(a).count("1") for a in adj) // 2 <= _compiled.MAX_SEARCH_EDGES
            and k < 256):
        return _compiled.competition_search(adj, k, node_limit)
    return _pykernels.competition_search(adj, k, node_limit)
