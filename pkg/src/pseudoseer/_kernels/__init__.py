"""Scoring kernels: compiled extension when built, NumPy fallback otherwise.

Set PSEUDOSEER_PURE_PY=1 to force the fallback; both backends are
bit-identical, so search results never depend on which one loaded.
"""

import os

if os.environ.get("PSEUDOSEER_PURE_PY"):
    from . import pure as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import pure as _impl

bm25_accumulate = _impl.bm25_accumulate
shifted_intersect = _impl.shifted_intersect
BACKEND = "pure" if _impl.__name__.endswith(".pure") else "compiled"
