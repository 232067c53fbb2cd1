"""Selects the permutation kernel backend at import time.

The compiled extension is used when it was built; setting the environment
variable CYCLICRANK_PURE_PYTHON=1 forces the pure-Python fallback.
"""

import os

if os.environ.get("CYCLICRANK_PURE_PYTHON", "") not in ("", "0"):
    from ._perm_py import *  # noqa: F401,F403
    BACKEND = "python"
else:
    try:
        from ._perm_ext import *  # noqa: F401,F403
        BACKEND = "cython"
    except ImportError:
        from ._perm_py import *  # noqa: F401,F403
        BACKEND = "python"
