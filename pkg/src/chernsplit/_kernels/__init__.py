"""Hot kernels with a compiled core and a pure-Python fallback.

The compiled extension is used when it was built (``pip install -e .``
compiles it if Cython and a C compiler are present). Setting the
environment variable ``CHERNSPLIT_PURE_PYTHON=1`` forces the fallback.
``BACKEND`` names the implementation that was selected at import.
"""

from __future__ import annotations

import os

from . import _state_sum_py

python_state_histogram = _state_sum_py.state_histogram

try:
    if os.environ.get("CHERNSPLIT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python backend requested")
    from ._state_sum import state_histogram as compiled_state_histogram
except ImportError:
    compiled_state_histogram = None

if compiled_state_histogram is not None:
    state_histogram = compiled_state_histogram
    BACKEND = "cython"
else:
    state_histogram = python_state_histogram
    BACKEND = "python"

__all__ = [
    "BACKEND",
    "compiled_state_histogram",
    "python_state_histogram",
    "state_histogram",
]
