"""Select the numerical kernel backend at import time.

The compiled extension :mod:`entfid._core` is preferred; the pure NumPy
module :mod:`entfid._core_py` is the fallback.  Setting the environment
variable ``ENTFID_PURE_PYTHON`` to anything other than ``0`` forces the
fallback even when the extension is built (useful for debugging and for
the backend-parity tests).
"""

import os

if os.environ.get("ENTFID_PURE_PYTHON", "").strip() not in ("", "0"):
    from . import _core_py as core
else:
    try:
        from . import _core as core  # type: ignore[no-redef]
    except ImportError:
        from . import _core_py as core

BACKEND = core.BACKEND
jacobi_eigh = core.jacobi_eigh
mef_objective = core.mef_objective
mef_grid_scan = core.mef_grid_scan
