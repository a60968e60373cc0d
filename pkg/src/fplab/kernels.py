"""Hot kernels with the implementation chosen at import time.

The compiled ``_ckernels`` extension is used when it was built; otherwise,
or when ``FPLAB_PURE_PYTHON`` is set to a non-empty value other than ``0``,
the pure-Python ``_pykernels`` twin is used.  Both expose the same functions
and must return identical results.
"""

import os

from fplab import _pykernels

python_impl = _pykernels

if os.environ.get("FPLAB_PURE_PYTHON", "") not in ("", "0"):
    compiled_impl = None
else:
    try:
        from fplab import _ckernels as compiled_impl
    except ImportError:  # extension not built
        compiled_impl = None

_impl = compiled_impl if compiled_impl is not None else python_impl
BACKEND = "cython" if compiled_impl is not None else "python"

chi_constants = _impl.chi_constants
is_balanced = _impl.is_balanced
