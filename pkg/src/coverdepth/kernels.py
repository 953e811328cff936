"""Backend selection for the hot kernels.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` fallback.  Setting ``COVERDEPTH_PURE_PYTHON=1``
forces the fallback.
"""

from __future__ import annotations

import os

from coverdepth import _pykernels

python_backend = _pykernels

if os.environ.get("COVERDEPTH_PURE_PYTHON") == "1":
    _impl = _pykernels
    compiled_backend = None
else:
    try:
        from coverdepth import _kernels as _impl
    except ImportError:
        _impl = _pykernels
        compiled_backend = None
    else:
        compiled_backend = _impl

BACKEND = "python" if _impl is _pykernels else "cython"

refine_round = _impl.refine_round
survival_round = _impl.survival_round
perfect_matching_exists = _impl.perfect_matching_exists
