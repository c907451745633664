"""Backend selection for the hot kernels.

The compiled extension is preferred when it built; the pure-Python core
is a drop-in replacement producing bit-identical results.  Set
SLICEGEMM_BACKEND=pure or =compiled to force one, or call set_active()
at runtime (tests and the backend benchmark do).
"""

from __future__ import annotations

import os

from . import _core_py

_BACKENDS = {"pure": _core_py}

try:
    from . import _core_cy

    _BACKENDS["compiled"] = _core_cy
except ImportError:
    _core_cy = None


def _initial():
    name = os.environ.get("SLICEGEMM_BACKEND", "").strip().lower()
    if name:
        if name not in _BACKENDS:
            raise ImportError(
                f"SLICEGEMM_BACKEND={name!r} but available backends are "
                f"{sorted(_BACKENDS)}"
            )
        return _BACKENDS[name]
    return _BACKENDS.get("compiled", _core_py)


_active = _initial()


def active():
    return _active


def active_name() -> str:
    return _active.NAME


def available() -> list:
    return sorted(_BACKENDS)


def get(name: str):
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"no backend {name!r}; have {sorted(_BACKENDS)}") from None


def set_active(name: str):
    global _active
    _active = get(name)
