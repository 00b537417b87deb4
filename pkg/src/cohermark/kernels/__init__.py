"""Hot photon kernels with a compiled core and a NumPy fallback.

The compiled Cython extension is used when it imported cleanly; set
``COHERMARK_NO_ACCEL=1`` to force the NumPy implementation (used by the
benchmark and the backend-equivalence tests).
"""

import os

from . import _numpy

_impl = _numpy
BACKEND = "numpy"

if os.environ.get("COHERMARK_NO_ACCEL", "0") in ("", "0"):
    try:
        from . import _accel

        _impl = _accel
        BACKEND = "accel"
    except ImportError:
        pass

thin_accept = _impl.thin_accept
phasor_bin = _impl.phasor_bin
phasor_bin_parts = _impl.phasor_bin_parts
spectrum_mags = _impl.spectrum_mags


def backend():
    """Name of the active kernel backend ('accel' or 'numpy')."""
    return BACKEND
