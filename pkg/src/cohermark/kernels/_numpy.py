"""Pure-NumPy kernels; same contracts as the compiled ``_accel`` module."""

import numpy as np


def thin_accept(times, u, visibility, omega):
    """Thinning mask for a phase-modulated emission rate.

    Candidate photons at ``times`` drawn from a homogeneous process at the
    peak rate are kept where ``u < (1 - V cos(omega t)) / (1 + V)``.

    Parameters
    ----------
    times : float64 array, candidate arrival times (seconds)
    u : float64 array, uniform(0,1) variates, same length
    visibility : float in [0, 1]
    omega : modulation angular frequency (rad/s)
    """
    times = np.asarray(times, dtype=np.float64)
    u = np.asarray(u, dtype=np.float64)
    v = float(visibility)
    return u * (1.0 + v) < 1.0 - v * np.cos(omega * times)


def phasor_bin(pixels, times, omega, n_pixels):
    """Per-pixel accumulation of the photon phasor exp(-i*omega*t).

    Returns ``(re, im)`` float64 arrays of length ``n_pixels`` holding the
    real and imaginary parts of each pixel's phasor sum.
    """
    times = np.asarray(times, dtype=np.float64)
    pixels = np.asarray(pixels)
    w = omega * times
    re = np.bincount(pixels, weights=np.cos(w), minlength=n_pixels)
    im = np.bincount(pixels, weights=-np.sin(w), minlength=n_pixels)
    return re, im


def phasor_bin_parts(parts, omega, n_pixels):
    """phasor_bin over a list of (times, pixels) batches, accumulated.

    Exactly the phasor of the merged stream (complex sums add); batching
    avoids materializing the merge.
    """
    if not parts:
        z = np.zeros(n_pixels, dtype=np.float64)
        return z, z.copy()
    pixels = np.concatenate([p for _, p in parts])
    times = np.concatenate([t for t, _ in parts])
    return phasor_bin(pixels, times, omega, n_pixels)


def spectrum_mags(times, omegas):
    """|sum_n exp(-i*t_n*omega)| for each omega in ``omegas``."""
    times = np.asarray(times, dtype=np.float64)
    omegas = np.asarray(omegas, dtype=np.float64)
    mags = np.empty(omegas.shape, dtype=np.float64)
    for k, w in enumerate(omegas):
        ph = w * times
        mags[k] = np.hypot(np.cos(ph).sum(), np.sin(ph).sum())
    return mags
