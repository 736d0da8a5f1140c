"""Selects the compiled kernel when it is importable, else the pure one.

Set ``POLYDENSITY_PURE=1`` to force the pure-Python kernel at import time;
:func:`use_backend` switches at run time (used by the backend benchmark).
"""

import os

from polydensity import _kernel as pure

try:
    from polydensity import _ckernel as compiled
except ImportError:  # pragma: no cover - depends on the build
    compiled = None

GAP = -1.0

_active = pure if compiled is None or os.environ.get("POLYDENSITY_PURE") else compiled


def kernel():
    return _active


def name() -> str:
    return "compiled" if _active is compiled else "pure"


def available() -> list[str]:
    return ["pure"] + (["compiled"] if compiled is not None else [])


def use_backend(which: str) -> str:
    """Activate ``"pure"`` or ``"compiled"``; returns the previous name."""
    global _active
    previous = name()
    if which == "pure":
        _active = pure
    elif which == "compiled":
        if compiled is None:
            raise RuntimeError("compiled kernel is not available")
        _active = compiled
    else:
        raise ValueError(f"unknown backend {which!r}")
    return previous
