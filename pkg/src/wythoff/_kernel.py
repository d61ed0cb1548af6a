"""Solver backend selection.

Prefers the compiled kernel, falls back to pure Python when the extension was
not built.  Set ``WYTHOFF_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and by tests that exercise both twins).
"""

import os

if os.environ.get("WYTHOFF_PURE_PYTHON"):
    from . import _solver_py as _backend
else:
    try:
        from . import _solver_cy as _backend  # type: ignore[no-redef]
    except ImportError:
        from . import _solver_py as _backend

BACKEND_NAME: str = _backend.NAME
solve_into_bits = _backend.solve_into_bits
