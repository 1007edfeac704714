"""Kernel backend selection: compiled extension when available, else pure Python.

Set ARGENT_PURE_PYTHON=1 to force the fallback (used by the benchmark and by
tests that exercise both code paths).
"""

import os

from . import _stablepy

if os.environ.get("ARGENT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _stablepy
    BACKEND = "python"
else:
    try:
        from . import _stablec as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        _impl = _stablepy
        BACKEND = "python"

MAX_ARGUMENTS = _stablepy.MAX_ARGUMENTS

stable_masks = _impl.stable_masks
acceptance_mask = _impl.acceptance_mask
