"""Backend selection for the characterization-statistic kernels.

The compiled extension is used when it was built; otherwise the NumPy
implementations take over with identical semantics.  Set the environment
variable ``PARETOGOF_PURE_PYTHON=1`` to force the fallback (useful for the
benchmark and for debugging).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("PARETOGOF_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

ratio_tv = _impl.ratio_tv
min_ikm = _impl.min_ikm
rossberg_i1d1 = _impl.rossberg_i1d1
order_i2d2 = _impl.order_i2d2

__all__ = ["BACKEND", "ratio_tv", "min_ikm", "rossberg_i1d1", "order_i2d2"]
