"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting
HEATCAP_PURE_PYTHON=1 in the environment forces the pure-Python twin (used by
the benchmark and the cross-backend tests). Both expose the same functions
and, by construction, the same numerical results.
"""

import os

from . import _kernels_py

if os.environ.get("HEATCAP_PURE_PYTHON", "").strip().lower() in ("1", "true", "yes"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - only hit on extension-less installs
        _impl = _kernels_py

BACKEND_NAME: str = _impl.BACKEND_NAME

forward_map = _impl.forward_map
w0 = _impl.w0
forward_map_many = _impl.forward_map_many
w0_many = _impl.w0_many
ladder_waterfill = _impl.ladder_waterfill
