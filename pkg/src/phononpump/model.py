"""Physical parameters, dressed basis, spectral density and phonon rates.

Unit conventions: frequencies and rates in ps^-1, time in ps, temperature in
Kelvin, hbar = 1 internally. SI conversions (Joule, Watt) happen only at the
reporting boundary, via UnitConstants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import SIGMA_X, SIGMA_Z


@dataclass(frozen=True)
class UnitConstants:
    """Fixed conversion constants (CODATA)."""

    hbar_over_kb: float = 7.638233  # K ps
    hbar: float = 1.054571817e-34  # J s


CONSTANTS = UnitConstants()


@dataclass(frozen=True)
class PhysicalParams:
    """Externally accessible knobs of the driven two-level system.

    omega_rabi: drive strength (ps^-1), must be > 0.
    delta: drive-transition detuning (ps^-1), any sign.
    alpha: phonon coupling strength (ps^2).
    cutoff: high-frequency cutoff of the spectral density (ps^-1), or None to
        disable the Gaussian cutoff factor.
    temperature: bath temperature (K).
    gamma_decay, gamma_dephasing: radiative decay / pure dephasing rates (ps^-1).
    """

    omega_rabi: float
    delta: float = 0.0
    alpha: float = 0.25
    cutoff: float | None = None
    temperature: float = 10.0
    gamma_decay: float = 0.0
    gamma_dephasing: float = 0.0

    def __post_init__(self) -> None:
        if not self.omega_rabi > 0:
            raise ValueError(f"omega_rabi must be positive, got {self.omega_rabi}")
        if self.alpha < 0:
            raise ValueError(f"alpha must be nonnegative, got {self.alpha}")
        if self.temperature < 0:
            raise ValueError(f"temperature must be nonnegative, got {self.temperature}")
        if self.gamma_decay < 0:
            raise ValueError(f"gamma_decay must be nonnegative, got {self.gamma_decay}")
        if self.gamma_dephasing < 0:
            raise ValueError(f"gamma_dephasing must be nonnegative, got {self.gamma_dephasing}")
        if self.cutoff is not None and not self.cutoff > 0:
            raise ValueError(f"cutoff must be positive when set, got {self.cutoff}")


@dataclass(frozen=True)
class DressedBasis:
    """Eigenbasis of the driven Hamiltonian and the sigma_z eigenoperators.

    minus_state / plus_state are the lower / upper eigenvectors in the (g, e)
    basis, split by lambda_gap. p_lambda = sin(2 theta) |-><+| is the
    phonon-assisted jump operator; p0 the static component of sigma_z.
    """

    theta: float
    lambda_gap: float
    p0: np.ndarray
    p_lambda: np.ndarray
    minus_state: np.ndarray
    plus_state: np.ndarray


def hamiltonian_matrix(params: PhysicalParams) -> np.ndarray:
    """Rotating-frame Hamiltonian delta/2 sigma_z + omega/2 sigma_x."""
    return 0.5 * params.delta * SIGMA_Z + 0.5 * params.omega_rabi * SIGMA_X


def dressed_basis(params: PhysicalParams) -> DressedBasis:
    """Diagonalize the driven two-level Hamiltonian.

    2 theta is the two-argument arctangent of (omega_rabi, delta), which keeps
    theta in (0, pi/2) and sin(2 theta) > 0 for either sign of the detuning, so
    the eigenvectors deform continuously across delta = 0.
    """
    if not params.omega_rabi > 0:
        raise ValueError("dressed basis requires omega_rabi > 0")
    two_theta = math.atan2(params.omega_rabi, params.delta)
    theta = 0.5 * two_theta
    lambda_gap = math.hypot(params.omega_rabi, params.delta)
    minus_state = np.array([math.cos(theta), -math.sin(theta)], dtype=complex)
    plus_state = np.array([math.sin(theta), math.cos(theta)], dtype=complex)
    p_lambda = math.sin(two_theta) * np.outer(minus_state, plus_state.conj())
    p0 = 0.5 * math.cos(two_theta) * (
        np.outer(minus_state, minus_state.conj()) - np.outer(plus_state, plus_state.conj())
    )
    return DressedBasis(
        theta=theta,
        lambda_gap=lambda_gap,
        p0=p0,
        p_lambda=p_lambda,
        minus_state=minus_state,
        plus_state=plus_state,
    )


def spectral_density(omega: float, params: PhysicalParams) -> float:
    """Cubic spectral density alpha omega^3, with optional Gaussian cutoff."""
    if omega < 0:
        raise ValueError(f"spectral density frequency must be nonnegative, got {omega}")
    value = params.alpha * omega**3
    if params.cutoff is not None:
        value *= math.exp(-((omega / params.cutoff) ** 2))
    return value


def thermal_occupancy(omega: float, temperature: float) -> float:
    """Bose occupancy 1 / (exp(hbar omega / kB T) - 1); exactly 0 at T = 0."""
    if omega <= 0:
        raise ValueError(f"thermal occupancy requires omega > 0, got {omega}")
    if temperature < 0:
        raise ValueError(f"temperature must be nonnegative, got {temperature}")
    if temperature == 0.0:
        return 0.0
    x = CONSTANTS.hbar_over_kb * omega / temperature
    if x > 700.0:
        # expm1 would overflow; occupancy underflows to exp(-x)
        return math.exp(-x)
    return 1.0 / math.expm1(x)


def phonon_rates(params: PhysicalParams, basis: DressedBasis) -> tuple[float, float]:
    """Downward (emission) and upward (absorption) phonon rates.

    gamma_down = J(Lambda) (n(Lambda) + 1) / 2, gamma_up = J(Lambda) n(Lambda) / 2.
    """
    j = spectral_density(basis.lambda_gap, params)
    n = thermal_occupancy(basis.lambda_gap, params.temperature)
    return 0.5 * j * (n + 1.0), 0.5 * j * n


def rwa_ratio(params: PhysicalParams, basis: DressedBasis) -> float:
    """J(Lambda) / Lambda; the secular approximation is marginal above ~0.5."""
    return spectral_density(basis.lambda_gap, params) / basis.lambda_gap


def phonon_energy_si(lambda_gap: float) -> float:
    """Energy hbar * Lambda of one exchanged phonon, in Joule."""
    return CONSTANTS.hbar * lambda_gap * 1e12
