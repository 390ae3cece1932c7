"""Kernel backend selection.

Imports the compiled digit-scan kernels when the extension built, falling
back to the pure-Python twin otherwise.  Set ``FALPHA_PURE_PYTHON=1`` to
force the fallback (used by the parity tests and the benchmark).
"""

import os

if os.environ.get("FALPHA_PURE_PYTHON") == "1":
    from falpha import _kernels_py as _impl
else:
    try:
        from falpha import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from falpha import _kernels_py as _impl

BACKEND = _impl.BACKEND
cantor_scaled = _impl.cantor_scaled
g_series_scaled = _impl.g_series_scaled
