# _jit.py
"""JIT shim: numba acceleration with a pure-Python fallback.

The environment variable KGSCATTER_NUMBA selects the path at import time:
unset / "1" / "true" / "yes" -> numba @njit kernels (the default),
"0" / "false" / "no"         -> plain Python execution of the same code.

The fallback also engages automatically when numba is not importable, so
the package stays usable on minimal installs (much slower on sweeps).
"""

import os


def _flag_enabled() -> bool:
    raw = os.environ.get("KGSCATTER_NUMBA", "1").strip().lower()
    return raw not in ("0", "false", "no")


USE_NUMBA = _flag_enabled()

if USE_NUMBA:
    try:
        from numba import njit as _numba_njit
    except ImportError:  # pragma: no cover - exercised only on minimal installs
        USE_NUMBA = False

if USE_NUMBA:
    def njit(*args, **kwargs):
        return _numba_njit(*args, **kwargs)
else:
    def njit(*args, **kwargs):
        # No-op decorator: keep the decorated function as plain Python.
        if args and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(func):
            return func

        return wrap
