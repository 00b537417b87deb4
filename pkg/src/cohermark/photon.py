"""Photon-arrival simulation for one read of a label.

Each alive emitter produces an inhomogeneous Poisson stream whose rate is
``peak_rate * rho_ee(theta, dphi(t), V)``, realized by thinning a
homogeneous candidate stream at the rate bound ``peak_rate * max_t rho_ee``.
Photons land on a pixel drawn uniformly over the emitter's disk.  A
susceptible emitter draws one exponential bleach time per read; the stream
truncates there and the emitter dies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from . import kernels
from .coherence import PulsePairDrive, peak_population
from .label import READ_STREAM, Emitter, LabelState

# sentinel emitter index for the dark-count child stream of a read
_DARK_TAG = 0xD123


@dataclass(frozen=True)
class ExposureConfig:
    """One camera exposure: duration (s), dark rate (photons/s/pixel), pulse area."""

    duration: float = 0.1
    dark_rate: float = 10.0
    pulse_area_theta: float = math.pi / 2
    psf: str = "disk"          # "disk" or "gaussian"
    psf_sigma: float = 1.5     # pixels, gaussian mode only

    def __post_init__(self):
        if self.duration <= 0:
            raise ValueError(f"duration must be > 0, got {self.duration}")
        if self.dark_rate < 0:
            raise ValueError(f"dark_rate must be >= 0, got {self.dark_rate}")
        if self.psf not in ("disk", "gaussian"):
            raise ValueError(f"psf must be 'disk' or 'gaussian', got {self.psf!r}")


class PhotonStream:
    """Per-pixel photon arrival times of one exposure.

    Stored flat as parallel (pixel, time) arrays sorted by pixel then time,
    which is the canonical order for every export.
    """

    def __init__(self, width, height, duration, pixels, times, presorted=False):
        self.width = int(width)
        self.height = int(height)
        self.duration = float(duration)
        pixels = np.asarray(pixels, dtype=np.uint32)
        times = np.asarray(times, dtype=np.float64)
        if pixels.shape != times.shape:
            raise ValueError("pixels and times must have equal length")
        if not presorted:
            order = np.lexsort((times, pixels))
            pixels, times = pixels[order], times[order]
        self.pixels = pixels
        self.times = times

    @property
    def n_photons(self) -> int:
        return int(self.times.size)

    @property
    def n_pixels(self) -> int:
        return self.width * self.height

    def counts(self) -> np.ndarray:
        """Per-pixel photon counts, shape (height, width)."""
        c = np.bincount(self.pixels, minlength=self.n_pixels)
        return c.reshape(self.height, self.width)

    def pixel_times(self, x: int, y: int) -> np.ndarray:
        """Sorted arrival times of one pixel."""
        flat = y * self.width + x
        lo = np.searchsorted(self.pixels, flat, side="left")
        hi = np.searchsorted(self.pixels, flat, side="right")
        return self.times[lo:hi]

    @classmethod
    def merge(cls, width, height, duration, parts):
        """Merge (pixels, times) array pairs into one sorted stream."""
        if parts:
            pixels = np.concatenate([p for p, _ in parts])
            times = np.concatenate([t for _, t in parts])
        else:
            pixels = np.empty(0, dtype=np.uint32)
            times = np.empty(0, dtype=np.float64)
        return cls(width, height, duration, pixels, times)

    # binary dump: all pixel indices (<u4) followed by all times (<f8); the
    # photon count is implied by the file size (12 bytes per photon).
    def dump(self, path) -> None:
        with open(path, "wb") as fh:
            fh.write(self.pixels.astype("<u4").tobytes())
            fh.write(self.times.astype("<f8").tobytes())

    @classmethod
    def load(cls, path, width, height, duration):
        with open(path, "rb") as fh:
            raw = fh.read()
        if len(raw) % 12:
            raise ValueError(f"truncated photon dump: {path}")
        n = len(raw) // 12
        pixels = np.frombuffer(raw[:4 * n], dtype="<u4")
        times = np.frombuffer(raw[4 * n:], dtype="<f8")
        return cls(width, height, duration, pixels, times, presorted=True)


@lru_cache(maxsize=32)
def _disk_offsets(radius: int) -> tuple[np.ndarray, np.ndarray]:
    """(dy, dx) integer offsets of the pixels with dy^2 + dx^2 <= r^2."""
    r = int(radius)
    span = np.arange(-r, r + 1)
    dy, dx = np.meshgrid(span, span, indexing="ij")
    keep = dy * dy + dx * dx <= r * r
    return dy[keep].copy(), dx[keep].copy()


def emitter_pixel_lut(emitter: Emitter, width: int, height: int) -> np.ndarray:
    """Flat indices of the emitter's disk, clipped to the canvas."""
    dy, dx = _disk_offsets(emitter.spot_radius)
    ys = emitter.y + dy
    xs = emitter.x + dx
    keep = (ys >= 0) & (ys < height) & (xs >= 0) & (xs < width)
    return (ys[keep] * width + xs[keep]).astype(np.uint32)


def simulate_emitter_stream(
    emitter: Emitter,
    drive: PulsePairDrive,
    exposure: ExposureConfig,
    rng: np.random.Generator,
    width: int,
    height: int,
):
    """Photon (times, pixels) of one emitter for one exposure.

    Returns ``(times, pixels, died)``; ``died`` is True when the sampled
    bleach time fell inside the exposure (the stream is truncated there).
    """
    v = emitter.visibility
    theta = exposure.pulse_area_theta
    lam_max = emitter.peak_rate * peak_population(theta, v)

    t_eff = exposure.duration
    died = False
    if emitter.bleach_susceptible and emitter.bleach_rate > 0:
        t_bleach = rng.exponential(1.0 / emitter.bleach_rate)
        if t_bleach < exposure.duration:
            t_eff = t_bleach
            died = True

    n_cand = rng.poisson(lam_max * t_eff)
    times = rng.random(n_cand) * t_eff
    # below ~1e-12 the modulation rejects nothing at double precision, so the
    # stream is an exact homogeneous process and thinning is skipped
    if v > 1e-12 and n_cand:
        u = rng.random(n_cand)
        times = times[kernels.thin_accept(times, u, v, drive.omega_mod)]

    if exposure.psf == "disk":
        lut = emitter_pixel_lut(emitter, width, height)
        pixels = lut[rng.integers(0, lut.size, size=times.size)]
    else:
        sig = exposure.psf_sigma
        xs = np.clip(np.rint(emitter.x + rng.normal(0, sig, times.size)), 0, width - 1)
        ys = np.clip(np.rint(emitter.y + rng.normal(0, sig, times.size)), 0, height - 1)
        pixels = (ys * width + xs).astype(np.uint32)
    return times, pixels, died


def dark_counts(canvas, dark_rate, duration, rng: np.random.Generator):
    """Homogeneous Poisson background: uniform times, uniform pixels."""
    if dark_rate < 0:
        raise ValueError(f"dark_rate must be >= 0, got {dark_rate}")
    width, height = canvas
    n = rng.poisson(dark_rate * duration * width * height)
    times = rng.random(n) * duration
    pixels = rng.integers(0, width * height, size=n, dtype=np.uint32)
    return times, pixels


def _read_base(state: LabelState, entropy=None) -> np.random.PCG64:
    key = (state.rng_seed, READ_STREAM, state.read_count)
    if entropy is not None:
        key = key + (int(entropy),)
    return np.random.PCG64(np.random.SeedSequence(key))


def read_rng(state: LabelState, emitter_index: int, entropy=None) -> np.random.Generator:
    """Deterministic child generator for one emitter of the current read.

    Children are jumped far-apart substreams of one per-read generator, so
    emitter ``i`` sees the same stream no matter which other emitters are
    alive or in what order they are simulated.
    """
    return np.random.Generator(_read_base(state, entropy).jumped(emitter_index))


def simulate_read_arrays(state: LabelState, drive: PulsePairDrive,
                         exposure: ExposureConfig, entropy=None):
    """One read without the final sort: (parts, new_state).

    ``parts`` is a list of per-source (times, pixels) pairs (alive emitters
    first, dark counts last).  Every source consumes its own child generator
    derived from the label seed and read index, so the result does not
    depend on iteration order.  ``entropy`` mixes extra seed material in for
    callers that want non-default randomness.
    """
    base = _read_base(state, entropy)
    parts = []
    new_emitters = []
    for i, emitter in enumerate(state.emitters):
        if not emitter.alive:
            new_emitters.append(emitter)
            continue
        rng = np.random.Generator(base.jumped(i))
        times, pixels, died = simulate_emitter_stream(
            emitter, drive, exposure, rng, state.width, state.height)
        parts.append((times, pixels))
        new_emitters.append(replace(emitter, alive=not died))
    if exposure.dark_rate > 0:
        rng = np.random.Generator(base.jumped(_DARK_TAG))
        times, pixels = dark_counts((state.width, state.height),
                                    exposure.dark_rate, exposure.duration, rng)
        parts.append((times, pixels))
    new_state = replace(state, emitters=new_emitters, read_count=state.read_count + 1)
    return parts, new_state


def simulate_read(state: LabelState, drive: PulsePairDrive,
                  exposure: ExposureConfig, entropy=None):
    """One full read: merged sorted PhotonStream plus the post-read state."""
    parts, new_state = simulate_read_arrays(state, drive, exposure, entropy)
    stream = PhotonStream.merge(
        state.width, state.height, exposure.duration,
        [(p, t) for t, p in parts])
    return stream, new_state
