"""Brute-force kernels behind the independent oracles.

The compiled extension ``_ckernels`` is used when it was built; otherwise, or
when ``QFORMS_PURE_PYTHON=1`` is set, the pure-Python module is selected.
``BACKEND`` names the active one.
"""

import os

from . import _pykernels as python

try:
    if os.environ.get("QFORMS_PURE_PYTHON") == "1":
        raise ImportError("pure Python requested")
    from . import _ckernels as compiled
except ImportError:
    compiled = None

_active = compiled if compiled is not None else python
BACKEND = "compiled" if compiled is not None else "python"

represented_mod_p = _active.represented_mod_p
witt_index_mod_p = _active.witt_index_mod_p
lattice_search = _active.lattice_search
local_isotropic_padic = _active.local_isotropic_padic
local_isotropic_laurent = _active.local_isotropic_laurent

__all__ = [
    "BACKEND",
    "compiled",
    "lattice_search",
    "local_isotropic_laurent",
    "local_isotropic_padic",
    "python",
    "represented_mod_p",
    "witt_index_mod_p",
]
