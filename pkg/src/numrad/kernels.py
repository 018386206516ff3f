"""Kernel backend selection: compiled extension when available, numpy fallback
otherwise.  Set NUMRAD_PURE_PYTHON=1 to force the fallback."""

from __future__ import annotations

import os

from . import _gridkern_np

if os.environ.get("NUMRAD_PURE_PYTHON"):
    _impl = _gridkern_np
    BACKEND = "python"
else:
    try:
        from . import _gridkern as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _gridkern_np
        BACKEND = "python"

radius_sweep = _impl.radius_sweep
opnorm_sweep = _impl.opnorm_sweep

# Full-array sweeps (witness extraction) always come from the numpy module.
radius_values = _gridkern_np.radius_values
opnorm_values = _gridkern_np.opnorm_values
