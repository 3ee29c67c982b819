"""Hot-kernel dispatch: compiled extension when present, numpy fallback otherwise.

Set COARSE_LAB_PURE_PYTHON=1 to force the fallback (used by the benchmark
and by tests that compare the two lanes).
"""

import os

from . import pure

if os.environ.get("COARSE_LAB_PURE_PYTHON"):
    _impl = pure
else:
    try:
        from . import _cykernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND = "pure" if _impl is pure else "compiled"

jacobi_eigh = _impl.jacobi_eigh
floyd_warshall = _impl.floyd_warshall

__all__ = ["BACKEND", "jacobi_eigh", "floyd_warshall", "pure"]
