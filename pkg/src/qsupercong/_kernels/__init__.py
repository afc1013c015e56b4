"""Hot kernels with a compiled backend and a Python fallback.

The Cython extension ``_ckernels`` is used when it was built; otherwise, or
when ``QSUPERCONG_PURE_PYTHON`` is set to a non-empty value, the numpy-based
``_pykernels`` module is used.  Both expose the same functions.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
try:
    from . import _ckernels as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

if compiled_backend is not None and not os.environ.get("QSUPERCONG_PURE_PYTHON"):
    _impl = compiled_backend
    BACKEND = "cython"
else:
    _impl = python_backend
    BACKEND = "python"

gcd_mod = _impl.gcd_mod
rem_mod = _impl.rem_mod
_morita_impl = _impl.morita_product


def morita_product(m, p, pk):
    if BACKEND == "cython" and pk >= 1 << 32:
        return python_backend.morita_product(m, p, pk)
    return _morita_impl(m, p, pk)


__all__ = ["BACKEND", "gcd_mod", "rem_mod", "morita_product",
           "compiled_backend", "python_backend"]
