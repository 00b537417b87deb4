"""Glyph decoding and accuracy analysis.

The decoder is deliberately boring and deterministic: median-filter the
normalized image, Otsu-binarize it, then pick the class template with the
highest Pearson correlation.  On top of it sit the accuracy sweep over mean
molecule counts, the repeated-read (disposability) trial, and the nonlinear
fit of the saturating accuracy model
``acc = beta * exp(-N0 * exp(-alpha*p*t) * k_dis) + c``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage, optimize

from . import imaging, label as label_mod, photon

NO_SIGNAL = "<no-signal>"


class DegenerateDataError(ValueError):
    """Accuracy data cannot identify the model parameters."""


class FitConvergenceError(RuntimeError):
    """Nonlinear least squares did not converge."""


@dataclass(frozen=True)
class TemplateSet:
    labels: tuple[str, ...]
    templates: dict  # label -> bool array (post decode-pipeline)
    width: int
    height: int


@dataclass(frozen=True)
class Classification:
    label: str
    score: float
    runner_up: str
    runner_up_score: float

    @property
    def no_signal(self) -> bool:
        return self.label == NO_SIGNAL


def _binarize(values: np.ndarray) -> np.ndarray:
    """Median filter then Otsu threshold on a 0..255 image."""
    filtered = ndimage.median_filter(values, size=3, mode="reflect")
    return filtered > otsu_threshold(filtered)


def otsu_threshold(values: np.ndarray) -> int:
    """Otsu's threshold over a uint8 image (ties resolve to the lowest level)."""
    hist = np.bincount(values.ravel(), minlength=256).astype(np.float64)
    total = hist.sum()
    if total == 0:
        return 0
    levels = np.arange(256, dtype=np.float64)
    w0 = np.cumsum(hist)
    m0 = np.cumsum(hist * levels)
    mean_all = m0[-1]
    w1 = total - w0
    with np.errstate(divide="ignore", invalid="ignore"):
        mu0 = m0 / w0
        mu1 = (mean_all - m0) / w1
        between = w0 * w1 * (mu0 - mu1) ** 2
    between = np.nan_to_num(between, nan=-1.0)
    return int(np.argmax(between))


def build_templates(charset, canvas=(512, 512), glyph_height_frac=0.42) -> TemplateSet:
    """Class templates rendered through the same decode pipeline as images."""
    labels = tuple(charset)
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate labels in charset")
    templates = {}
    for lab in labels:
        mask = label_mod.rasterize_glyph(lab, canvas, glyph_height_frac)
        values = mask.mask.astype(np.uint8) * np.uint8(255)
        templates[lab] = _binarize(values)
    return TemplateSet(labels, templates, canvas[0], canvas[1])


def pair_templates(canvas=(512, 512), glyph_height_frac=0.42):
    """All 26*26 two-letter class labels (templates built on demand)."""
    return tuple(a + b for a in label_mod.fontdata.SUPPORTED if a.isalpha()
                 for b in label_mod.fontdata.SUPPORTED if b.isalpha())


def _pearson(a: np.ndarray, b_stats, b: np.ndarray) -> float:
    n, sum_b, var_b = b_stats
    sum_a = float(a.sum())
    var_a = sum_a * (1.0 - sum_a / n)  # binary: sum(a^2) == sum(a)
    if var_a <= 0 or var_b <= 0:
        return math.nan
    sum_ab = float(np.count_nonzero(a & b))
    cov = sum_ab - sum_a * sum_b / n
    return cov / math.sqrt(var_a * var_b)


def classify(image, templates: TemplateSet) -> Classification:
    """Decode one image; an empty/featureless image reports NO_SIGNAL."""
    values = image.values
    if values.shape != (templates.height, templates.width):
        raise ValueError("image dimensions do not match the template set")
    if not values.any():
        return Classification(NO_SIGNAL, 0.0, NO_SIGNAL, 0.0)
    binary = _binarize(values)
    n = binary.size
    scored = []
    for lab in templates.labels:
        tmpl = templates.templates[lab]
        sum_b = float(tmpl.sum())
        var_b = sum_b * (1.0 - sum_b / n)
        r = _pearson(binary, (n, sum_b, var_b), tmpl)
        if not math.isnan(r):
            scored.append((-r, lab))
    if not scored:
        return Classification(NO_SIGNAL, 0.0, NO_SIGNAL, 0.0)
    scored.sort()
    best_score, best = -scored[0][0], scored[0][1]
    if len(scored) > 1:
        up_score, up = -scored[1][0], scored[1][1]
    else:
        up_score, up = best_score, best
    return Classification(best, best_score, up, up_score)


def wilson_interval(correct: int, trials: int, z: float = 1.959963984540054):
    """Wilson 95% confidence interval for a binomial proportion."""
    if trials <= 0:
        raise ValueError("trials must be >= 1")
    p = correct / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (p + z2 / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z2 / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class SweepRow:
    mean_n: float
    trials: int
    correct: int
    accuracy: float
    ci_low: float
    ci_high: float


SWEEP_STREAM = 7
READ_TRIAL_STREAM = 8


def _read_freq_image(state, config, entropy=None, want_time=False):
    """Fast-path render of one read (no global photon sort)."""
    parts, new_state = photon.simulate_read_arrays(
        state, config.drive(), config.exposure(), entropy)
    if want_time:
        time_img, freq_img = imaging.images_from_parts(
            parts, config.omega_mod, state.width, state.height)
        return time_img, freq_img, new_state
    freq_img = imaging.freq_image_from_parts(
        parts, config.omega_mod, state.width, state.height)
    return freq_img, new_state


def simulate_trial_label(config, rng, mean_n: float):
    """Random glyph + Poisson molecule count, built as a fresh label."""
    text = config.charset[rng.integers(0, len(config.charset))]
    n = int(rng.poisson(mean_n)) if mean_n > 0 else 0
    seed = int(rng.integers(0, 2**63 - 1))
    state = label_mod.build_label(text, config, seed, molecule_count=n)
    return state, text


def accuracy_sweep(mean_counts, trials: int, config, seed: int,
                   templates: TemplateSet | None = None,
                   progress=None) -> list[SweepRow]:
    """Frequency-image decode accuracy per mean molecule count.

    Per trial: random glyph from the configured charset, molecule count
    drawn Poisson around the mean, one simulated read, one classification.
    Trials are independently seeded from (seed, index), so results do not
    depend on execution order.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if templates is None:
        templates = build_templates(
            config.charset, (config.canvas_width, config.canvas_height),
            config.glyph_height_frac)
    rows = []
    for ci, mean_n in enumerate(mean_counts):
        correct = 0
        for t in range(trials):
            rng = np.random.default_rng(
                np.random.SeedSequence((seed, SWEEP_STREAM, ci, t)))
            state, text = simulate_trial_label(config, rng, mean_n)
            freq_img, _ = _read_freq_image(state, config)
            if classify(freq_img, templates).label == text:
                correct += 1
            if progress is not None:
                progress(mean_n, t, trials)
        lo, hi = wilson_interval(correct, trials)
        rows.append(SweepRow(float(mean_n), trials, correct,
                             correct / trials, lo, hi))
    return rows


@dataclass(frozen=True)
class ReadTrialRow:
    read_index: int
    mean_survivors: float
    trials: int
    correct: int
    accuracy: float
    ci_low: float
    ci_high: float


def repeated_read_trial(config, n_reads: int, trials: int, seed: int,
                        templates: TemplateSet | None = None,
                        glyph: str | None = None) -> list[ReadTrialRow]:
    """Consecutive reads of persistent labels: survivor decay vs accuracy.

    Each read cycle is the 0.1 s exposure (bleaching happens in-exposure)
    followed by the configured extra illumination, so cumulative light dose
    grows 0.1 s -> 1.0 s over three default cycles.  Survivor counts are
    taken at the start of each read (the molecules that contribute photons).
    """
    if n_reads < 1:
        raise ValueError("n_reads must be >= 1")
    if templates is None:
        templates = build_templates(
            config.charset, (config.canvas_width, config.canvas_height),
            config.glyph_height_frac)
    survivors = np.zeros(n_reads, dtype=np.float64)
    correct = np.zeros(n_reads, dtype=np.int64)
    for t in range(trials):
        rng = np.random.default_rng(
            np.random.SeedSequence((seed, READ_TRIAL_STREAM, t)))
        if glyph is None:
            text = config.charset[rng.integers(0, len(config.charset))]
        else:
            text = glyph
        state = label_mod.build_label(
            text, config, int(rng.integers(0, 2**63 - 1)))
        for r in range(n_reads):
            survivors[r] += state.alive_molecules()
            freq_img, state = _read_freq_image(state, config)
            if classify(freq_img, templates).label == text:
                correct[r] += 1
            state = label_mod.apply_bleaching(
                state, config.extra_illumination, label_mod.bleach_rng(state))
    rows = []
    for r in range(n_reads):
        lo, hi = wilson_interval(int(correct[r]), trials)
        rows.append(ReadTrialRow(r + 1, survivors[r] / trials, trials,
                                 int(correct[r]), correct[r] / trials, lo, hi))
    return rows


# -- accuracy model fit --------------------------------------------------------

@dataclass(frozen=True)
class AccuracyModelFit:
    beta: float
    k_dis: float
    alpha_p: float
    c: float
    residual_r2: float

    def predict(self, n0, t=0.0):
        n0 = np.asarray(n0, dtype=np.float64)
        return self.beta * np.exp(-n0 * np.exp(-self.alpha_p * np.asarray(t))
                                  * self.k_dis) + self.c


def _model(params, n0, t, c):
    beta, k_dis, alpha_p = params
    return beta * np.exp(-n0 * np.exp(-alpha_p * t) * k_dis) + c


def fit_accuracy_model(data, c: float = 1.0, fix_c: bool = True,
                       n_classes: int = 36, alpha_p_init: float = 2.2388,
                       max_nfev: int = 5000) -> AccuracyModelFit:
    """Least-squares fit of (beta, k_dis, alpha_p) to (N0, t, accuracy) rows.

    ``c`` stays fixed at 1 by default; pass fix_c=False to free it for
    diagnostics.  Raises DegenerateDataError when the rows cannot identify
    the parameters and FitConvergenceError when the solver fails.
    """
    arr = np.asarray(data, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError("data must be rows of (n0, t, accuracy)")
    if arr.shape[0] < 4:
        raise DegenerateDataError("need at least 4 data points")
    n0, t, acc = arr[:, 0], arr[:, 1], arr[:, 2]
    if np.ptp(acc) < 1e-9:
        raise DegenerateDataError("constant accuracy data: k_dis unidentifiable")
    x0 = n0 * np.exp(-alpha_p_init * t)
    if np.unique(np.round(x0, 9)).size < 2:
        raise DegenerateDataError("need >= 2 distinct effective molecule numbers")

    beta0 = -(1.0 - 1.0 / n_classes)
    # log-linearization for the decay-rate start value
    y = (acc - c) / beta0
    good = (y > 1e-9) & (x0 > 0)
    if good.sum() >= 2:
        k0 = float(np.median(-np.log(y[good]) / x0[good]))
        k0 = min(max(k0, 1e-6), 10.0)
    else:
        k0 = 0.05

    if fix_c:
        def residual(p):
            return _model(p, n0, t, c) - acc
        p0 = [beta0, k0, alpha_p_init]
        bounds = ([-5.0, 1e-9, 0.0], [-1e-9, 100.0, 100.0])
    else:
        def residual(p):
            return _model(p[:3], n0, t, p[3]) - acc
        p0 = [beta0, k0, alpha_p_init, c]
        bounds = ([-5.0, 1e-9, 0.0, -1.0], [-1e-9, 100.0, 100.0, 2.0])

    result = optimize.least_squares(residual, p0, bounds=bounds, max_nfev=max_nfev)
    if not result.success:
        raise FitConvergenceError(f"least squares failed: {result.message}")
    beta, k_dis, alpha_p = result.x[:3]
    c_fit = c if fix_c else float(result.x[3])
    ss_res = float(np.sum(result.fun ** 2))
    ss_tot = float(np.sum((acc - acc.mean()) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 0.0
    return AccuracyModelFit(float(beta), float(k_dis), float(alpha_p), c_fit, r2)
