"""Closed-form physics of a phase-driven two-level emitter.

Everything here is pure and stateless: the excitation pulse pair is treated
as two instantaneous area kicks (pulse widths are far below every other
timescale), the relative phase between the pulses sweeps -pi..pi as a
sawtooth at the modulation frequency, and dephasing enters only through the
coherence visibility ``V = exp(-dt / T2*)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


class DephasingGeometry(enum.Enum):
    """Dipole-coupling geometry of the emitter's environment."""

    SINGLE_AXIS = "single_axis"
    ISOTROPIC_THREE_AXIS = "isotropic_three_axis"


@dataclass(frozen=True)
class PulsePairDrive:
    """Pulse-pair excitation with sawtooth phase modulation.

    theta1/theta2 are pulse areas in radians, ``inter_pulse_delay`` the
    pulse-pair separation in seconds and ``mod_frequency`` the sawtooth
    repetition rate in Hz.  The swept phase range is fixed at -pi..pi.
    """

    theta1: float = math.pi / 2
    theta2: float = math.pi / 2
    inter_pulse_delay: float = 100e-12
    mod_frequency: float = 1000.0

    def __post_init__(self):
        _check_pulse_area(self.theta1, "theta1")
        _check_pulse_area(self.theta2, "theta2")
        if self.mod_frequency <= 0:
            raise ValueError(f"mod_frequency must be > 0, got {self.mod_frequency}")
        if self.inter_pulse_delay < 0:
            raise ValueError(
                f"inter_pulse_delay must be >= 0, got {self.inter_pulse_delay}"
            )

    @property
    def omega_mod(self) -> float:
        """Modulation angular frequency in rad/s."""
        return TWO_PI * self.mod_frequency


@dataclass(frozen=True)
class CoherenceParams:
    """Dephasing time T2* (seconds) and the visibility it produces."""

    dephasing_time: float
    visibility: float

    def __post_init__(self):
        if self.dephasing_time <= 0:
            raise ValueError(f"dephasing_time must be > 0, got {self.dephasing_time}")
        if not 0.0 <= self.visibility <= 1.0:
            raise ValueError(f"visibility must be in [0, 1], got {self.visibility}")

    @classmethod
    def from_drive(cls, drive: PulsePairDrive, dephasing_time: float) -> "CoherenceParams":
        return cls(dephasing_time, visibility(drive.inter_pulse_delay, dephasing_time))


@dataclass(frozen=True)
class DephasingEnvironment:
    """White-noise environment: per-axis spectral density S (1/s)."""

    geometry: DephasingGeometry
    noise_density: float

    def __post_init__(self):
        if self.noise_density <= 0:
            raise ValueError(f"noise_density must be > 0, got {self.noise_density}")


def _check_pulse_area(theta: float, name: str = "theta") -> None:
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"{name} must be in [0, pi], got {theta}")


def relative_phase(t, drive: PulsePairDrive):
    """Sawtooth relative phase at time ``t`` (seconds): -pi..pi, period 1/f_mod.

    Accepts scalars or arrays; total on t >= 0.
    """
    frac = np.mod(np.asarray(t, dtype=np.float64) * drive.mod_frequency, 1.0)
    out = -math.pi + TWO_PI * frac
    if out.ndim == 0:
        return float(out)
    return out


def excited_population_general(theta1: float, theta2: float, delta_phi):
    """Excited-state population after two dephasing-free pulses.

    rho_ee = (1 - cos(theta1) cos(theta2) + sin(theta1) sin(theta2) cos(dphi)) / 2
    """
    _check_pulse_area(theta1, "theta1")
    _check_pulse_area(theta2, "theta2")
    return 0.5 * (
        1.0
        - math.cos(theta1) * math.cos(theta2)
        + math.sin(theta1) * math.sin(theta2) * np.cos(delta_phi)
    )


def excited_population(theta: float, delta_phi, visibility: float):
    """Excited-state population for an equal pulse pair with dephasing.

    rho_ee = sin^2(theta) (1 + V cos(dphi)) / 2; the phase-dependent term is
    scaled by the coherence visibility ``V``.
    """
    _check_pulse_area(theta, "theta")
    if not 0.0 <= visibility <= 1.0:
        raise ValueError(f"visibility must be in [0, 1], got {visibility}")
    return 0.5 * math.sin(theta) ** 2 * (1.0 + visibility * np.cos(delta_phi))


def visibility(delta_t: float, t2_star: float) -> float:
    """Coherence visibility exp(-delta_t / T2*) for pulse separation delta_t."""
    if t2_star <= 0:
        raise ValueError(f"T2* must be > 0, got {t2_star}")
    if delta_t < 0:
        raise ValueError(f"delta_t must be >= 0, got {delta_t}")
    return math.exp(-delta_t / t2_star)


def dephasing_time(env: DephasingEnvironment) -> float:
    """Dephasing time under white noise of per-axis density S.

    A single-axis dipole dephases at rate S (T2* = 1/S); an isotropic
    three-axis emitter accumulates all three channels (T2* = 1/(3S)).
    """
    if env.geometry is DephasingGeometry.SINGLE_AXIS:
        return 1.0 / env.noise_density
    return 1.0 / (3.0 * env.noise_density)


def peak_population(theta: float, vis: float) -> float:
    """max_t rho_ee over a modulation period: sin^2(theta) (1 + V) / 2."""
    _check_pulse_area(theta, "theta")
    return 0.5 * math.sin(theta) ** 2 * (1.0 + vis)


def mean_population(theta: float) -> float:
    """Period-average of rho_ee: the cos term integrates to zero."""
    _check_pulse_area(theta, "theta")
    return 0.5 * math.sin(theta) ** 2
