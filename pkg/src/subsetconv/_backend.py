"""Kernel backend selection: compiled extension with pure-Python fallback.

On import the compiled ``subsetconv._kernels`` extension is preferred;
if it is missing (e.g. running from an unbuilt source tree) the
interface-compatible ``subsetconv._pykernels`` module is used instead.
Results are bitwise identical either way; only speed differs.

``force_python()`` / ``restore()`` let tests and benchmarks pin the
backend explicitly.  There is deliberately no environment-variable
switch.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on build environment
    _compiled = None

active = _compiled if _compiled is not None else _pykernels


def has_compiled() -> bool:
    return _compiled is not None


def compiled_module():
    return _compiled


def python_module():
    return _pykernels


def force_python() -> None:
    """Switch every dispatch to the pure-Python kernels (for tests/benchmarks)."""
    global active
    active = _pykernels


def restore() -> None:
    """Re-select the default backend (compiled when available)."""
    global active
    active = _compiled if _compiled is not None else _pykernels
