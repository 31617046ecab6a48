"""Kernel selection: compiled extension if available, pure python otherwise.

Set GUCA_PURE_PYTHON=1 to force the fallback (used by the benchmark to
compare both backends).
"""

import os

if os.environ.get("GUCA_PURE_PYTHON") == "1":
    from . import _poly_py as _backend
else:
    try:
        from . import _poly_c as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _poly_py as _backend

add = _backend.add
mul = _backend.mul
divexact = _backend.divexact

BACKEND = "compiled" if _backend.__name__.endswith("_poly_c") else "pure-python"
