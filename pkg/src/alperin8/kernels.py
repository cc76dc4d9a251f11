"""Inner-loop kernels: compiled core when built, pure Python otherwise.

Callers go through module attributes (``kernels.beta_hooks(...)``) so that
:func:`set_backend` takes effect everywhere.
"""

from __future__ import annotations

from . import _kernels_py as pure

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

_NAMES = ("hook_lengths", "beta_hooks", "cross_hooks", "structure_constants")
BACKEND = ""


def set_backend(name: str) -> None:
    """Select ``"cython"`` or ``"python"``."""
    global BACKEND
    if name == "cython":
        if compiled is None:
            raise RuntimeError("compiled kernels are not built")
        impl = compiled
    elif name == "python":
        impl = pure
    else:
        raise ValueError(f"unknown backend {name!r}")
    g = globals()
    for n in _NAMES:
        g[n] = getattr(impl, n)
    BACKEND = name


set_backend("cython" if compiled is not None else "python")
