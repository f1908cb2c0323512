"""Saturation backend selection.

The compiled extension (``_kernel``, built from ``_kernel.pyx``) and the
pure-Python module (``_kernel_py``) implement the same contract; the
fastest available one is chosen at import.  Set ``CNLDOC_PURE=1`` to
force the pure-Python kernel (the parity tests and the kernel benchmark
compare both).
"""

import os

from . import _kernel_py

if os.environ.get("CNLDOC_PURE"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl  # compiled extension
    except ImportError:
        _impl = _kernel_py

BACKEND = "native" if _impl is not _kernel_py else "pure"

KernelState = _impl.KernelState
apply_rule_full = _impl.apply_rule_full
run_rounds = _impl.run_rounds
UNUSED = _impl.UNUSED


def backends():
    """All available (name, module) kernel backends."""
    out = [("pure", _kernel_py)]
    try:
        from . import _kernel
        out.append(("native", _kernel))
    except ImportError:
        pass
    return out
