"""Signal-processing core: per-photon single-frequency DFT and image rendering.

The per-pixel modulation magnitude is ``f(w) = |sum_n exp(-i t_n w)|`` over
that pixel's photon arrival times; evaluated only at the modulation
frequency (and small spectrum grids), it costs one complex multiply-add per
photon.  Time- and frequency-domain images share the same 256-level
max normalization for display while raw magnitudes stay available for
metrics.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .photon import PhotonStream

TWO_PI = 2.0 * math.pi


def normalize_u8(raw: np.ndarray) -> np.ndarray:
    """Linear max-scaling to 0..255 (all-zero input stays all-zero)."""
    raw = np.asarray(raw, dtype=np.float64)
    peak = raw.max() if raw.size else 0.0
    if peak <= 0:
        return np.zeros(raw.shape, dtype=np.uint8)
    return np.floor(raw * (255.0 / peak) + 0.5).astype(np.uint8)


@dataclass(frozen=True)
class TimeDomainImage:
    counts: np.ndarray  # int64 per-pixel photon counts

    @property
    def width(self) -> int:
        return self.counts.shape[1]

    @property
    def height(self) -> int:
        return self.counts.shape[0]

    @property
    def values(self) -> np.ndarray:
        return normalize_u8(self.counts)


@dataclass(frozen=True)
class FrequencyDomainImage:
    raw: np.ndarray  # float64 per-pixel f(omega_mod)
    omega: float

    @property
    def width(self) -> int:
        return self.raw.shape[1]

    @property
    def height(self) -> int:
        return self.raw.shape[0]

    @property
    def values(self) -> np.ndarray:
        return normalize_u8(self.raw)


@dataclass(frozen=True)
class ModulationSpectrum:
    frequencies_hz: np.ndarray
    magnitudes: np.ndarray

    @property
    def normalized(self) -> np.ndarray:
        peak = self.magnitudes.max() if self.magnitudes.size else 0.0
        if peak <= 0:
            return np.zeros_like(self.magnitudes)
        return self.magnitudes / peak

    @property
    def peak_frequency_hz(self) -> float:
        return float(self.frequencies_hz[int(np.argmax(self.magnitudes))])


def dft_magnitude(times, omega: float) -> float:
    """|sum_n exp(-i t_n omega)|; 0 for an empty stream, bounded by len(times)."""
    times = np.asarray(times, dtype=np.float64)
    if times.size == 0:
        return 0.0
    return float(kernels.spectrum_mags(times, np.array([omega], dtype=np.float64))[0])


def modulation_spectrum(times, frequencies_hz) -> ModulationSpectrum:
    """dft_magnitude evaluated over a frequency grid (Hz)."""
    freqs = np.asarray(frequencies_hz, dtype=np.float64)
    if freqs.size == 0:
        raise ValueError("frequency grid must be non-empty")
    times = np.asarray(times, dtype=np.float64)
    mags = kernels.spectrum_mags(times, TWO_PI * freqs)
    return ModulationSpectrum(freqs, mags)


def render_time_image(stream: PhotonStream) -> TimeDomainImage:
    """Per-pixel photon counts of one exposure."""
    return TimeDomainImage(stream.counts().astype(np.int64))


def render_freq_image(stream: PhotonStream, omega_mod: float) -> FrequencyDomainImage:
    """Per-pixel f(omega_mod) of one exposure."""
    if omega_mod <= 0:
        raise ValueError(f"omega_mod must be > 0, got {omega_mod}")
    return freq_image_from_arrays(stream.pixels, stream.times, omega_mod,
                                  stream.width, stream.height)


def time_image_from_arrays(pixels, width: int, height: int) -> TimeDomainImage:
    counts = np.bincount(np.asarray(pixels), minlength=width * height)
    return TimeDomainImage(counts.reshape(height, width).astype(np.int64))


def freq_image_from_arrays(pixels, times, omega_mod: float,
                           width: int, height: int) -> FrequencyDomainImage:
    re, im = kernels.phasor_bin(pixels, times, omega_mod, width * height)
    raw = np.hypot(re, im).reshape(height, width)
    return FrequencyDomainImage(raw, omega_mod)


def images_from_parts(parts, omega_mod: float, width: int, height: int):
    """(time image, freq image) accumulated per photon batch.

    Equivalent to rendering the merged stream: per-pixel counts add, and the
    per-pixel phasor of a merged stream is the complex sum of the per-batch
    phasors.
    """
    n = width * height
    if parts:
        all_pixels = np.concatenate([p for _, p in parts])
        counts = np.bincount(all_pixels, minlength=n).astype(np.int64)
    else:
        counts = np.zeros(n, dtype=np.int64)
    re, im = kernels.phasor_bin_parts(parts, omega_mod, n)
    time_img = TimeDomainImage(counts.reshape(height, width))
    freq_img = FrequencyDomainImage(np.hypot(re, im).reshape(height, width), omega_mod)
    return time_img, freq_img


def freq_image_from_parts(parts, omega_mod: float, width: int, height: int) -> FrequencyDomainImage:
    """Frequency image only (skips the photon-count accumulation)."""
    n = width * height
    re, im = kernels.phasor_bin_parts(parts, omega_mod, n)
    return FrequencyDomainImage(np.hypot(re, im).reshape(height, width), omega_mod)


@dataclass(frozen=True)
class VisibilityEstimate:
    value: float
    clamped: bool


def estimate_visibility(f: float, n: int, periods: float | None = None) -> VisibilityEstimate:
    """Visibility from the modulation magnitude: V = 2 f / N, clamped to [0, 1].

    ``periods`` (exposure duration times modulation frequency), when given,
    must cover at least 10 modulation cycles for the estimate to be valid.
    """
    if n <= 0:
        raise ValueError(f"photon count must be > 0, got {n}")
    if periods is not None and periods < 10:
        raise ValueError(f"need >= 10 modulation periods, got {periods:g}")
    v = 2.0 * f / n
    if v > 1.0:
        return VisibilityEstimate(1.0, True)
    if v < 0.0:
        return VisibilityEstimate(0.0, True)
    return VisibilityEstimate(v, False)


def contrast_ratio(image, signal_mask: np.ndarray) -> float:
    """mean(raw on mask) / mean(raw off mask); inf when the off-mask mean is 0."""
    raw = np.asarray(image.raw if hasattr(image, "raw") else image.counts,
                     dtype=np.float64)
    signal_mask = np.asarray(signal_mask, dtype=bool)
    if signal_mask.shape != raw.shape:
        raise ValueError("mask shape does not match image")
    n_on = int(signal_mask.sum())
    if n_on == 0 or n_on == signal_mask.size:
        raise ValueError("mask must be a non-empty proper subset of the canvas")
    on = float(raw[signal_mask].mean())
    off = float(raw[~signal_mask].mean())
    if off == 0.0:
        return math.inf
    return on / off


# -- file formats --------------------------------------------------------------

def write_pgm(path, values: np.ndarray) -> None:
    """8-bit binary portable graymap (P5), bit-exact for a given array."""
    values = np.asarray(values)
    if values.dtype != np.uint8 or values.ndim != 2:
        raise ValueError("PGM export needs a 2-D uint8 array")
    h, w = values.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(values.tobytes())


def read_pgm(path) -> np.ndarray:
    """Read a binary (P5) graymap written by write_pgm (tolerates comments)."""
    with open(path, "rb") as fh:
        data = fh.read()
    if not data.startswith(b"P5"):
        raise ValueError(f"not a binary PGM (P5) file: {path}")
    fields = []
    pos = 2
    while len(fields) < 3:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos] != 0x0A:
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        fields.append(int(data[start:pos]))
    pos += 1  # single whitespace after maxval
    w, h, maxval = fields
    if maxval != 255:
        raise ValueError(f"unsupported maxval {maxval}")
    pixels = np.frombuffer(data, dtype=np.uint8, count=w * h, offset=pos)
    return pixels.reshape(h, w).copy()


def write_magnitude_csv(path, image: FrequencyDomainImage) -> None:
    """Raw per-pixel magnitudes as (x, y, value) rows."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y", "value"])
        for y in range(image.height):
            row = image.raw[y]
            for x in range(image.width):
                writer.writerow([x, y, repr(float(row[x]))])


def write_spectrum_csv(path, spectrum: ModulationSpectrum) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["frequency_hz", "magnitude", "normalized"])
        norm = spectrum.normalized
        for f, m, s in zip(spectrum.frequencies_hz, spectrum.magnitudes, norm):
            writer.writerow([repr(float(f)), repr(float(m)), repr(float(s))])
