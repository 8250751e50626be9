"""Kernel backend selection.

The compiled Cython kernel is preferred; the pure-Python kernel is the
drop-in fallback.  ``TUPLEZERO_BACKEND=python`` or ``=c`` forces a lane
(forcing ``c`` raises if the extension is missing, rather than silently
running slow).
"""

import os

_forced = os.environ.get("TUPLEZERO_BACKEND", "").strip().lower()

if _forced in ("python", "py"):
    from . import _pykern as kern
elif _forced in ("c", "cext", "compiled"):
    from . import _ckern as kern  # ImportError here is intentional
elif _forced:
    raise ValueError(f"TUPLEZERO_BACKEND must be 'c' or 'python', not {_forced!r}")
else:
    try:
        from . import _ckern as kern
    except ImportError:
        from . import _pykern as kern


def backend_name():
    return kern.BACKEND


def load_backend(name):
    """Explicitly import one kernel lane (used by equivalence tests and the
    backend benchmark)."""
    if name in ("python", "py"):
        from . import _pykern
        return _pykern
    if name in ("c", "cext", "compiled"):
        from . import _ckern
        return _ckern
    raise ValueError(f"unknown backend {name!r}")


def available_backends():
    names = []
    try:
        from . import _ckern  # noqa: F401
        names.append("c")
    except ImportError:
        pass
    names.append("python")
    return names
