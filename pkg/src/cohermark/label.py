"""Label construction: glyph masks, emitter placement, layer stacks, bleaching.

A label is the persistent artifact of the whole pipeline: a glyph-shaped
cloud of coherent signal molecules plus a disordered layer of incoherent
interference emitters, with a layer stack that decides whether illumination
consumes it.  Labels round-trip through a checksummed JSON file.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import fontdata

MOLECULE = "coherent_molecule"
QD = "incoherent_qd"

DISPOSABLE = "disposable"
QUENCH_INHIBITED = "quench_inhibited"

# stream tags for deriving independent child generators from the label seed
PLACEMENT_STREAM = 1
READ_STREAM = 2
BLEACH_STREAM = 3

LABEL_FORMAT = "cohermark-label/1"

# keep some margin to the canvas edge when a glyph is width-limited
_WIDTH_MARGIN = 0.92


class ChecksumError(ValueError):
    """Label file content does not match its recorded checksum."""


@dataclass(frozen=True)
class GlyphMask:
    """Binary glyph support on the canvas."""

    text: str
    width: int
    height: int
    physical_extent_um: tuple[float, float]
    mask: np.ndarray  # bool, shape (height, width)

    @property
    def area(self) -> int:
        return int(self.mask.sum())

    @property
    def member_pixels(self) -> np.ndarray:
        """Flat pixel indices of the mask, sorted row-major."""
        return np.flatnonzero(self.mask)


@dataclass
class Emitter:
    x: int
    y: int
    spot_radius: int
    kind: str
    peak_rate: float
    visibility: float
    alive: bool = True
    bleach_susceptible: bool = False
    bleach_rate: float = 0.0


@dataclass(frozen=True)
class BleachModel:
    """Photobleaching rate k = alpha * power; survival is exp(-k t)."""

    alpha: float = 2.2388
    power: float = 1.0

    def __post_init__(self):
        if self.alpha < 0 or self.power < 0:
            raise ValueError("alpha and power must be >= 0")

    @property
    def k_bleach(self) -> float:
        return self.alpha * self.power


@dataclass
class LabelState:
    glyph_text: str
    width: int
    height: int
    mask_area: int
    layer_stack: str
    rng_seed: int
    bleach_model: BleachModel
    emitters: list[Emitter] = field(default_factory=list)
    read_count: int = 0

    def alive_molecules(self) -> int:
        return sum(1 for e in self.emitters if e.kind == MOLECULE and e.alive)

    def alive_by_kind(self, kind: str) -> list[Emitter]:
        return [e for e in self.emitters if e.kind == kind and e.alive]


def validate_glyph_text(text: str) -> None:
    """Charset contract: single 0-9/A-Z glyph or a two-letter A-Z pair."""
    if len(text) == 1:
        if text not in fontdata.SUPPORTED:
            raise ValueError(f"unsupported character: {text!r}")
    elif len(text) == 2:
        for ch in text:
            if not ("A" <= ch <= "Z"):
                raise ValueError(f"two-glyph labels are A-Z pairs, got {text!r}")
    else:
        raise ValueError(f"glyph text must be 1 or 2 characters, got {text!r}")


def rasterize_glyph(
    text: str,
    canvas: tuple[int, int] = (512, 512),
    glyph_height_frac: float = 0.42,
    physical_extent_um: tuple[float, float] = (80.0, 80.0),
) -> GlyphMask:
    """Render ``text`` centered on the canvas and return its binary mask.

    The glyph is scaled to ``glyph_height_frac`` of the canvas height
    (shrunk further if a wide pair would overflow the width) with
    nearest-neighbor sampling of the bundled bitmap font, so the same inputs
    always give the same mask.
    """
    validate_glyph_text(text)
    width, height = canvas
    native = fontdata.compose_text(text)
    nh, nw = native.shape
    scale = min(glyph_height_frac * height / nh, _WIDTH_MARGIN * width / nw)
    th, tw = int(round(nh * scale)), int(round(nw * scale))
    if th < 2 or tw < 2 or th > height or tw > width:
        raise ValueError(f"glyph {text!r} does not fit a {width}x{height} canvas")
    rows = np.minimum((np.arange(th) * nh) // th, nh - 1)
    cols = np.minimum((np.arange(tw) * nw) // tw, nw - 1)
    scaled = native[rows][:, cols]
    mask = np.zeros((height, width), dtype=bool)
    y0 = (height - th) // 2
    x0 = (width - tw) // 2
    mask[y0:y0 + th, x0:x0 + tw] = scaled
    if not mask.any():
        raise ValueError(f"glyph {text!r} rasterized empty")
    return GlyphMask(text, width, height, physical_extent_um, mask)


def place_signal_emitters(
    mask: GlyphMask,
    count: int,
    radii,
    rng: np.random.Generator,
    peak_rate: float,
    visibility: float,
    bleach_rate: float = 0.0,
) -> list[Emitter]:
    """Place ``count`` coherent molecules uniformly over distinct mask pixels."""
    members = mask.member_pixels
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if count > members.size:
        raise ValueError(f"count {count} exceeds mask size {members.size}")
    chosen = rng.choice(members.size, size=count, replace=False)
    radii = np.atleast_1d(np.asarray(radii, dtype=int))
    radius_idx = rng.integers(0, radii.size, size=count)
    out = []
    for flat, ri in zip(members[chosen], radius_idx):
        y, x = divmod(int(flat), mask.width)
        out.append(Emitter(
            x=x, y=y, spot_radius=int(radii[ri]), kind=MOLECULE,
            peak_rate=peak_rate, visibility=visibility,
            bleach_susceptible=bleach_rate > 0, bleach_rate=bleach_rate,
        ))
    return out


def place_interference(
    canvas: tuple[int, int],
    count: int,
    radii,
    rng: np.random.Generator,
    peak_rate: float,
    visibility: float = 0.0,
    bleach_rate: float = 0.0,
) -> list[Emitter]:
    """Scatter ``count`` incoherent emitters uniformly over the whole canvas."""
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    width, height = canvas
    xs = rng.integers(0, width, size=count)
    ys = rng.integers(0, height, size=count)
    radii = np.atleast_1d(np.asarray(radii, dtype=int))
    radius_idx = rng.integers(0, radii.size, size=count)
    return [
        Emitter(
            x=int(x), y=int(y), spot_radius=int(radii[ri]), kind=QD,
            peak_rate=peak_rate, visibility=visibility,
            bleach_susceptible=bleach_rate > 0, bleach_rate=bleach_rate,
        )
        for x, y, ri in zip(xs, ys, radius_idx)
    ]


def build_label(text: str, config, seed: int, molecule_count: int | None = None) -> LabelState:
    """Compose a fresh label: glyph mask, signal molecules, interference layer.

    ``config`` is a RunConfig (see config module).  ``molecule_count``
    overrides the configured molecule count (used by sweeps that draw the
    per-label count from a distribution); 0 molecules gives a signal-free
    label.
    """
    mask = rasterize_glyph(
        text,
        canvas=(config.canvas_width, config.canvas_height),
        glyph_height_frac=config.glyph_height_frac,
        physical_extent_um=config.physical_extent_um,
    )
    bleach = BleachModel(config.bleach_alpha, config.bleach_power)
    quenched = config.layer_stack == QUENCH_INHIBITED
    mol_rate = 0.0 if quenched else bleach.k_bleach
    rng = np.random.default_rng(np.random.SeedSequence((seed, PLACEMENT_STREAM)))
    n_mol = config.molecules if molecule_count is None else molecule_count
    emitters: list[Emitter] = []
    if n_mol > 0:
        emitters.extend(place_signal_emitters(
            mask, n_mol, config.spot_radii, rng,
            peak_rate=config.molecule_peak_rate,
            visibility=config.molecule_visibility,
            bleach_rate=mol_rate,
        ))
        if quenched:
            for e in emitters:
                e.bleach_susceptible = False
    emitters.extend(place_interference(
        (config.canvas_width, config.canvas_height), config.interference,
        config.spot_radii, rng,
        peak_rate=config.qd_peak_rate,
        visibility=config.qd_visibility,
        bleach_rate=config.qd_bleach_rate,
    ))
    return LabelState(
        glyph_text=text,
        width=config.canvas_width,
        height=config.canvas_height,
        mask_area=mask.area,
        layer_stack=config.layer_stack,
        rng_seed=int(seed),
        bleach_model=bleach,
        emitters=emitters,
        read_count=0,
    )


def apply_bleaching(state: LabelState, illumination_time: float,
                    rng: np.random.Generator) -> LabelState:
    """Independent survival draw exp(-k t) for every alive, susceptible emitter."""
    if illumination_time < 0:
        raise ValueError(f"illumination_time must be >= 0, got {illumination_time}")
    emitters = []
    for e in state.emitters:
        survived = e.alive
        if e.alive and e.bleach_susceptible and illumination_time > 0:
            p = math.exp(-e.bleach_rate * illumination_time)
            survived = bool(rng.random() < p)
        emitters.append(replace(e, alive=survived))
    return replace(state, emitters=emitters)


def bleach_rng(state: LabelState) -> np.random.Generator:
    """Child generator for inter-read illumination of the current read cycle."""
    seq = np.random.SeedSequence((state.rng_seed, BLEACH_STREAM, state.read_count))
    return np.random.default_rng(seq)


# -- persistence --------------------------------------------------------------

def _payload(state: LabelState) -> dict:
    return {
        "glyph_text": state.glyph_text,
        "width": state.width,
        "height": state.height,
        "mask_area": state.mask_area,
        "layer_stack": state.layer_stack,
        "rng_seed": state.rng_seed,
        "read_count": state.read_count,
        "bleach": {"alpha": state.bleach_model.alpha,
                   "power": state.bleach_model.power},
        "emitters": [
            {
                "x": e.x, "y": e.y, "r": e.spot_radius, "kind": e.kind,
                "peak_rate": e.peak_rate, "visibility": e.visibility,
                "alive": e.alive, "bleach_susceptible": e.bleach_susceptible,
                "bleach_rate": e.bleach_rate,
            }
            for e in state.emitters
        ],
    }


def _checksum(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("ascii")).hexdigest()


def save_label(state: LabelState, path) -> None:
    payload = _payload(state)
    doc = {"format": LABEL_FORMAT, "checksum": _checksum(payload), "payload": payload}
    with open(path, "w") as fh:
        json.dump(doc, fh, sort_keys=True, indent=1)
        fh.write("\n")


def load_label(path) -> LabelState:
    with open(path) as fh:
        doc = json.load(fh)
    if doc.get("format") != LABEL_FORMAT:
        raise ValueError(f"not a {LABEL_FORMAT} file: {path}")
    payload = doc["payload"]
    if _checksum(payload) != doc.get("checksum"):
        raise ChecksumError(f"checksum mismatch (tampered or corrupt): {path}")
    emitters = [
        Emitter(
            x=d["x"], y=d["y"], spot_radius=d["r"], kind=d["kind"],
            peak_rate=d["peak_rate"], visibility=d["visibility"],
            alive=d["alive"], bleach_susceptible=d["bleach_susceptible"],
            bleach_rate=d["bleach_rate"],
        )
        for d in payload["emitters"]
    ]
    return LabelState(
        glyph_text=payload["glyph_text"],
        width=payload["width"],
        height=payload["height"],
        mask_area=payload["mask_area"],
        layer_stack=payload["layer_stack"],
        rng_seed=payload["rng_seed"],
        bleach_model=BleachModel(payload["bleach"]["alpha"], payload["bleach"]["power"]),
        emitters=emitters,
        read_count=payload["read_count"],
    )
