"""cohermark: forge, read and grade coherence-modulated photon labels."""

__version__ = "0.1.0"

from .kernels import backend as kernel_backend  # noqa: F401
