"""Selection between the compiled playout kernel and the pure-Python path.

The compiled extension is optional: when it is missing (or the
``BOARDKIT_PURE`` environment variable is set) everything runs on the
object model with identical results, only slower. Both paths share the
same RNG and move order, so evaluations are bit-identical across them.
"""
from __future__ import annotations

import os
import weakref

from ..core.types import ConfigError

_speedups = None
if not os.environ.get("BOARDKIT_PURE"):
    try:
        from .. import _speedups as _compiled

        _speedups = _compiled
    except ImportError:
        _speedups = None


class IterationAborted(Exception):
    """A deepening iteration overran its deadline; its results are discarded."""


def compiled_available() -> bool:
    return _speedups is not None


_kernels: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def kernel_for(spec, backend: str | None = None):
    """The compiled kernel for ``spec``, or None for the pure path.

    ``backend`` forces the choice: ``"pure"`` always returns None,
    ``"compiled"`` raises :class:`ConfigError` when unavailable.
    """
    if backend == "pure":
        return None
    if _speedups is None:
        if backend == "compiled":
            raise ConfigError("compiled backend is not available in this build")
        return None
    if spec in _kernels:
        kern = _kernels[spec]
    else:
        tables = spec.kernel_spec()
        kern = _speedups.Kernel(tables) if tables is not None else None
        _kernels[spec] = kern
    if kern is None and backend == "compiled":
        raise ConfigError(f"no compiled kernel for game {spec.game_id!r}")
    return kern


def backend_name(spec, backend: str | None = None) -> str:
    return "compiled" if kernel_for(spec, backend) is not None else "pure"
