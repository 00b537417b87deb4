"""Run configuration: one INI-style file drives every stage of the pipeline.

All physics defaults live here rather than in code; loading validates each
value against the owning module's invariants (a bad file fails fast with a
ConfigError).
"""

from __future__ import annotations

import configparser
import io
import math
from dataclasses import dataclass, field, replace

from .coherence import PulsePairDrive, visibility
from .label import DISPOSABLE, QUENCH_INHIBITED
from .photon import ExposureConfig

DEFAULT_CHARSET = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"


class ConfigError(ValueError):
    """Invalid or inconsistent run configuration."""


@dataclass(frozen=True)
class RunConfig:
    # canvas
    canvas_width: int = 512
    canvas_height: int = 512
    physical_extent_um: tuple[float, float] = (80.0, 80.0)
    # glyphs
    charset: str = DEFAULT_CHARSET
    glyph_height_frac: float = 0.42
    # emitters
    molecules: int = 100
    interference: int = 1000
    spot_radii: tuple[int, ...] = (4,)
    molecule_peak_rate: float = 1.75e5
    qd_rate_ratio: float = 2.2
    # coherence drive
    theta: float = math.pi / 2
    delta_t: float = 100e-12
    t2_molecule: float = 1e-9
    t2_qd: float = 1e-12
    mod_frequency: float = 1000.0
    # exposure
    exposure_duration: float = 0.1
    dark_rate: float = 10.0
    psf: str = "disk"
    psf_sigma: float = 1.5
    # bleaching
    bleach_alpha: float = 2.2388
    bleach_power: float = 1.0
    qd_bleach_rate: float = 0.0
    extra_illumination: float = 0.35
    # label
    layer_stack: str = DISPOSABLE
    # sweep
    sweep_mean_counts: tuple[float, ...] = (10, 30, 60, 90, 120, 150)
    sweep_trials: int = 500
    # spectrum grid
    spectrum_f_min: float = 500.0
    spectrum_f_max: float = 1500.0
    spectrum_points: int = 101

    def __post_init__(self):
        try:
            self.drive()
            self.exposure()
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        if self.canvas_width < 8 or self.canvas_height < 8:
            raise ConfigError("canvas must be at least 8x8")
        if self.molecules < 0 or self.interference < 0:
            raise ConfigError("emitter counts must be >= 0")
        if not self.spot_radii or any(r < 1 for r in self.spot_radii):
            raise ConfigError("spot radii must be positive")
        if self.molecule_peak_rate <= 0 or self.qd_rate_ratio < 0:
            raise ConfigError("emission rates must be positive")
        if self.t2_molecule <= 0 or self.t2_qd <= 0:
            raise ConfigError("dephasing times must be positive")
        if self.layer_stack not in (DISPOSABLE, QUENCH_INHIBITED):
            raise ConfigError(f"unknown layer stack {self.layer_stack!r}")
        if self.bleach_alpha < 0 or self.bleach_power < 0 or self.qd_bleach_rate < 0:
            raise ConfigError("bleach rates must be >= 0")
        if self.extra_illumination < 0:
            raise ConfigError("extra_illumination must be >= 0")
        if not (0 < self.glyph_height_frac <= 1):
            raise ConfigError("glyph_height_frac must be in (0, 1]")
        if self.sweep_trials < 1:
            raise ConfigError("sweep trials must be >= 1")
        if self.spectrum_points < 1 or self.spectrum_f_min <= 0 \
                or self.spectrum_f_max < self.spectrum_f_min:
            raise ConfigError("bad spectrum grid")
        if not self.charset or len(set(self.charset)) != len(self.charset):
            raise ConfigError("charset must be non-empty without duplicates")

    # derived physics
    @property
    def molecule_visibility(self) -> float:
        return visibility(self.delta_t, self.t2_molecule)

    @property
    def qd_visibility(self) -> float:
        return visibility(self.delta_t, self.t2_qd)

    @property
    def qd_peak_rate(self) -> float:
        return self.molecule_peak_rate * self.qd_rate_ratio

    @property
    def omega_mod(self) -> float:
        return 2.0 * math.pi * self.mod_frequency

    def drive(self) -> PulsePairDrive:
        return PulsePairDrive(self.theta, self.theta, self.delta_t, self.mod_frequency)

    def exposure(self) -> ExposureConfig:
        return ExposureConfig(self.exposure_duration, self.dark_rate, self.theta,
                              self.psf, self.psf_sigma)

    def spectrum_grid(self):
        import numpy as np
        return np.linspace(self.spectrum_f_min, self.spectrum_f_max,
                           self.spectrum_points)

    def with_overrides(self, **kwargs) -> "RunConfig":
        return replace(self, **kwargs)


_SCHEMA = {
    "canvas": {"width": ("canvas_width", int), "height": ("canvas_height", int),
               "extent_um": ("physical_extent_um", "float_pair")},
    "glyph": {"charset": ("charset", "charset"),
              "height_frac": ("glyph_height_frac", float)},
    "emitters": {"molecules": ("molecules", int),
                 "interference": ("interference", int),
                 "spot_radii": ("spot_radii", "int_tuple"),
                 "molecule_peak_rate": ("molecule_peak_rate", float),
                 "qd_rate_ratio": ("qd_rate_ratio", float)},
    "coherence": {"theta": ("theta", float), "delta_t": ("delta_t", float),
                  "t2_molecule": ("t2_molecule", float), "t2_qd": ("t2_qd", float),
                  "mod_frequency": ("mod_frequency", float)},
    "exposure": {"duration": ("exposure_duration", float),
                 "dark_rate": ("dark_rate", float),
                 "psf": ("psf", str), "psf_sigma": ("psf_sigma", float)},
    "bleach": {"alpha": ("bleach_alpha", float), "power": ("bleach_power", float),
               "qd_bleach_rate": ("qd_bleach_rate", float),
               "extra_illumination": ("extra_illumination", float)},
    "label": {"layer_stack": ("layer_stack", str)},
    "sweep": {"mean_counts": ("sweep_mean_counts", "float_tuple"),
              "trials": ("sweep_trials", int)},
    "spectrum": {"f_min": ("spectrum_f_min", float), "f_max": ("spectrum_f_max", float),
                 "points": ("spectrum_points", int)},
}


def _parse_value(raw: str, kind):
    if kind is int:
        return int(raw)
    if kind is float:
        return float(raw)
    if kind is str:
        return raw.strip()
    if kind == "int_tuple":
        return tuple(int(v) for v in raw.replace(",", " ").split())
    if kind == "float_tuple":
        return tuple(float(v) for v in raw.replace(",", " ").split())
    if kind == "float_pair":
        pair = tuple(float(v) for v in raw.replace(",", " ").split())
        if len(pair) != 2:
            raise ValueError(f"expected two values, got {raw!r}")
        return pair
    if kind == "charset":
        return expand_charset(raw.strip())
    raise AssertionError(kind)


def expand_charset(spec: str) -> str:
    """Expand 'A-Z' style ranges; plain strings pass through."""
    out = []
    i = 0
    while i < len(spec):
        if i + 2 < len(spec) and spec[i + 1] == "-":
            lo, hi = spec[i], spec[i + 2]
            out.extend(chr(c) for c in range(ord(lo), ord(hi) + 1))
            i += 3
        else:
            out.append(spec[i])
            i += 1
    return "".join(out)


def load_config(path=None, text=None) -> RunConfig:
    """RunConfig from an INI file (TOML-style [section] key = value)."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        if text is not None:
            parser.read_string(text)
        else:
            with open(path) as fh:
                parser.read_file(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}") from exc

    overrides = {}
    for section in parser.sections():
        if section not in _SCHEMA:
            raise ConfigError(f"unknown config section [{section}]")
        for key, raw in parser.items(section):
            if key not in _SCHEMA[section]:
                raise ConfigError(f"unknown key {key!r} in [{section}]")
            attr, kind = _SCHEMA[section][key]
            try:
                overrides[attr] = _parse_value(raw, kind)
            except ValueError as exc:
                raise ConfigError(f"[{section}] {key}: {exc}") from exc
    try:
        return RunConfig(**overrides)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc


def default_config_text() -> str:
    """Annotated default configuration, parseable by load_config."""
    cfg = RunConfig()
    buf = io.StringIO()
    buf.write("# cohermark run configuration (defaults)\n")
    buf.write("# every value can be overridden; comments record the intent\n\n")
    buf.write("[canvas]\n")
    buf.write(f"width = {cfg.canvas_width}        # reference scenario canvas, pixels\n")
    buf.write(f"height = {cfg.canvas_height}\n")
    buf.write("extent_um = 80, 80   # physical field of view represented by the canvas\n\n")
    buf.write("[glyph]\n")
    buf.write("charset = 0-9A-Z     # classes used for sweeps and templates\n")
    buf.write(f"height_frac = {cfg.glyph_height_frac}   "
              "# glyph height fraction; a two-letter mask covers ~2e4 pixels\n\n")
    buf.write("[emitters]\n")
    buf.write(f"molecules = {cfg.molecules}      # signal molecules placed in the glyph mask\n")
    buf.write(f"interference = {cfg.interference}  # incoherent emitters scattered over the canvas\n")
    buf.write("spot_radii = 4       # emission disk radius, drawn per emitter (3 and 4 supported)\n")
    buf.write(f"molecule_peak_rate = {cfg.molecule_peak_rate:g}  "
              "# photons/s at full excitation (~9e3 photons per 0.1 s read)\n")
    buf.write(f"qd_rate_ratio = {cfg.qd_rate_ratio:g}  "
              "# interference brightness relative to molecules; >= ~2.1 keeps the\n")
    buf.write("# glyph buried below the binarization threshold in time-domain images\n\n")
    buf.write("[coherence]\n")
    buf.write(f"theta = {cfg.theta!r}  # pulse area, radians (pi/2)\n")
    buf.write(f"delta_t = {cfg.delta_t:g}   # inter-pulse delay, seconds\n")
    buf.write(f"t2_molecule = {cfg.t2_molecule:g}  # molecule dephasing time (nanosecond regime)\n")
    buf.write(f"t2_qd = {cfg.t2_qd:g}       # interference dephasing time (picosecond regime)\n")
    buf.write(f"mod_frequency = {cfg.mod_frequency:g}  # sawtooth phase modulation, Hz\n\n")
    buf.write("[exposure]\n")
    buf.write(f"duration = {cfg.exposure_duration:g}   # seconds per read\n")
    buf.write(f"dark_rate = {cfg.dark_rate:g}   # dark counts, photons/s/pixel\n")
    buf.write(f"psf = {cfg.psf}           # disk (flat spot) or gaussian\n")
    buf.write(f"psf_sigma = {cfg.psf_sigma:g}      # pixels, gaussian mode only\n\n")
    buf.write("[bleach]\n")
    buf.write(f"alpha = {cfg.bleach_alpha:g}       # 1/(power*s); k = alpha * power\n")
    buf.write(f"power = {cfg.bleach_power:g}          # excitation power, arbitrary units\n")
    buf.write("# k = alpha*power is calibrated so ~150 molecules decay to ~20\n")
    buf.write("# over 0.9 s of cumulative illumination\n")
    buf.write(f"qd_bleach_rate = {cfg.qd_bleach_rate:g}  # interference layer does not bleach by default\n")
    buf.write(f"extra_illumination = {cfg.extra_illumination:g}  "
              "# extra seconds of illumination per read cycle (handling/alignment);\n")
    buf.write("# with 0.1 s exposures this makes three reads span 0.1 -> 1.0 s cumulative\n\n")
    buf.write("[label]\n")
    buf.write(f"layer_stack = {cfg.layer_stack}  # disposable | quench_inhibited\n\n")
    buf.write("[sweep]\n")
    buf.write("mean_counts = 10, 30, 60, 90, 120, 150  # mean molecules per label\n")
    buf.write(f"trials = {cfg.sweep_trials}\n\n")
    buf.write("[spectrum]\n")
    buf.write(f"f_min = {cfg.spectrum_f_min:g}   # Hz; grid brackets the 1 kHz modulation peak\n")
    buf.write(f"f_max = {cfg.spectrum_f_max:g}\n")
    buf.write(f"points = {cfg.spectrum_points}\n")
    return buf.getvalue()
