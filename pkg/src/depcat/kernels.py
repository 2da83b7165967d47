"""Kernel selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
numpy implementations in ``_pykernels`` take over.  Setting the environment
variable ``DEPCAT_PURE=1`` forces the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("DEPCAT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        _impl = _compiled
        BACKEND = "compiled"

UNIQUENESS = _pykernels.UNIQUENESS
EXISTENCE = _pykernels.EXISTENCE

assoc_defect = _impl.assoc_defect
universal_defect = _impl.universal_defect
mono_defect = _impl.mono_defect
finset_product_defect = _impl.finset_product_defect


def backend_module(name):
    """Return the kernel module for ``"python"`` or ``"compiled"``."""
    if name == "python":
        return _pykernels
    if name == "compiled":
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown kernel backend {name!r}")
