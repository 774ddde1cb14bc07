"""Kernel backend selection.

Prefers the compiled Cython extension ``weberosc._kernels``; falls back
to the pure-Python twin ``weberosc._kernels_py``.  Set the environment
variable ``WEBEROSC_PURE=1`` to force the fallback (used by the
benchmark and the backend-parity tests).
"""

import os

if os.environ.get("WEBEROSC_PURE") == "1":
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as kernels

        BACKEND = "python"
