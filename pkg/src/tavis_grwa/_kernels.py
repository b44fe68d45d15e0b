"""Kernel backend selection.

The compiled ``_core`` extension is used when importable; otherwise, or when
the environment variable ``TAVIS_GRWA_PURE`` is set to a non-empty value other
than ``0``, the numpy implementations in ``_kernels_py`` are used.
"""

import os

from . import _kernels_py

_force_pure = os.environ.get("TAVIS_GRWA_PURE", "") not in ("", "0")

_compiled = None
if not _force_pure:
    try:
        from . import _core as _compiled
    except ImportError:
        _compiled = None

_impl = _compiled if _compiled is not None else _kernels_py
BACKEND = "cython" if _compiled is not None else "python"

laguerre_table = _impl.laguerre_table
block_eigh = _impl.block_eigh


def backends():
    """Available backends as a ``{name: module}`` dict (python always present)."""
    found = {"python": _kernels_py}
    if _compiled is not None:
        found["cython"] = _compiled
    else:
        try:
            from . import _core
        except ImportError:
            pass
        else:
            found["cython"] = _core
    return found
