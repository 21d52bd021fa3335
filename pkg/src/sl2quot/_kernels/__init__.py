"""Hot loops, compiled when possible.

The Cython extension ``_ckernels`` is used when it was built; otherwise the
pure-Python ``_pyimpl`` is imported.  Setting ``SL2QUOT_PURE_PYTHON=1``
forces the fallback.
"""

import os

from . import _pyimpl

BACKEND = "python"

if os.environ.get("SL2QUOT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pyimpl
else:
    _impl = _pyimpl

dominant_rep = _impl.dominant_rep
weyl_orbit = _impl.weyl_orbit
orbit_values = _impl.orbit_values
subset_sums = _impl.subset_sums
signed_sums = _impl.signed_sums

__all__ = ["BACKEND", "dominant_rep", "weyl_orbit", "orbit_values", "subset_sums", "signed_sums"]
