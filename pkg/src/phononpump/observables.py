"""Reduced-state observables: phonon flux, steady state, heat-transfer rate.

The reduced two-level state rho = sum_m rho_m obeys a plain Lindblad equation
with jump operators (P, 2 gamma_down), (P^dag, 2 gamma_up), (sigma_minus,
gamma_decay) and (sigma_z, gamma_dephasing). Its steady state is extracted
from the null space of the 4x4 vectorized generator, and the net phonon flux

    <ndot> = 2 (gamma_down tr(P rho P^dag) - gamma_up tr(P^dag rho P))

is positive for net emission into the bath and negative for net absorption.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import algebra
from .counting import NumberResolvedState, Trajectory
from .model import (
    CONSTANTS,
    DressedBasis,
    PhysicalParams,
    hamiltonian_matrix,
    phonon_energy_si,
    phonon_rates,
    rwa_ratio,
)

GAAS_HEAT_CAPACITY = 1.85e-12  # J/K, micrometer cube
DEGENERACY_THRESHOLD = 1e-10


@dataclass(frozen=True)
class SteadyStateReport:
    """Steady state of the reduced master equation and its energy budget."""

    rho_ss: np.ndarray
    flux: float  # ps^-1, positive = net phonon emission
    energy_rate_natural: float  # Lambda * flux, ps^-2
    energy_rate_si: float  # W
    rwa_ratio: float
    unique: bool


@dataclass(frozen=True)
class CoolingEstimate:
    energy_rate_si: float  # W
    heat_capacity: float  # J/K
    temperature_slope: float  # K/s


def reduced_density(state: NumberResolvedState) -> np.ndarray:
    """Sum of all ladder blocks."""
    return state.blocks.sum(axis=0)


def phonon_flux(rho: np.ndarray, params: PhysicalParams, basis: DressedBasis) -> float:
    """Net phonon emission rate for a reduced state rho (ps^-1)."""
    gamma_down, gamma_up = phonon_rates(params, basis)
    p = basis.p_lambda
    pd = algebra.dagger(p)
    return float(
        2.0 * (gamma_down * np.trace(p @ rho @ pd) - gamma_up * np.trace(pd @ rho @ p)).real
    )


def reduced_generator(params: PhysicalParams, basis: DressedBasis) -> np.ndarray:
    """4x4 vectorized generator of the reduced master equation."""
    gamma_down, gamma_up = phonon_rates(params, basis)
    jumps = [
        (basis.p_lambda, 2.0 * gamma_down),
        (algebra.dagger(basis.p_lambda), 2.0 * gamma_up),
        (algebra.SIGMA_MINUS, params.gamma_decay),
        (algebra.SIGMA_Z, params.gamma_dephasing),
    ]
    return algebra.build_generator(jumps, hamiltonian_matrix(params))


def steady_state(params: PhysicalParams, basis: DressedBasis) -> SteadyStateReport:
    """Null-space steady state of the reduced master equation.

    The kernel direction is the right-singular vector of the smallest singular
    value; a degenerate kernel (second-smallest singular value below 1e-10) is
    reported via unique=False rather than resolved silently.
    """
    gamma_down, gamma_up = phonon_rates(params, basis)
    if gamma_down + gamma_up + params.gamma_decay + params.gamma_dephasing <= 0:
        raise ValueError("no dissipation: steady state is not unique")
    gen = reduced_generator(params, basis)
    _, singular_values, vh = np.linalg.svd(gen)
    unique = bool(singular_values[-2] >= DEGENERACY_THRESHOLD)

    vec = vh[-1].conj()
    trace = vec[0] + vec[3]
    if not unique and abs(trace) < 1e-8:
        # pick the kernel combination with the largest trace
        v2 = vh[-2].conj()
        t2 = v2[0] + v2[3]
        if abs(t2) > abs(trace):
            vec, trace = v2, t2
    if abs(trace) < 1e-12:
        raise ValueError("steady-state kernel is traceless; generator is defective")
    rho = algebra.devectorize(vec / trace)
    rho = 0.5 * (rho + algebra.dagger(rho))

    flux = phonon_flux(rho, params, basis)
    return SteadyStateReport(
        rho_ss=rho,
        flux=flux,
        energy_rate_natural=basis.lambda_gap * flux,
        energy_rate_si=energy_rate_si(flux, basis.lambda_gap),
        rwa_ratio=rwa_ratio(params, basis),
        unique=unique,
    )


def energy_rate_si(flux: float, lambda_gap: float) -> float:
    """Heat-transfer rate hbar * Lambda * flux converted to Watt."""
    return phonon_energy_si(lambda_gap) * flux * 1e12


def boltzmann_diagnostic(
    trajectory: Trajectory, basis: DressedBasis, temperature: float
) -> tuple[float, float]:
    """Measured vs expected dressed-population ratio after a phonon-only run.

    Returns (tr(rho_0 |+><+|) / tr(rho_1), exp(-hbar Lambda / kB T)) at the
    trajectory's final time. Only meaningful when the run used
    gamma_decay = gamma_dephasing = 0.
    """
    state = trajectory.final_state
    if state is None:
        raise ValueError("trajectory has no final state")
    plus_proj = np.outer(basis.plus_state, basis.plus_state.conj())
    numer = float(np.trace(state.block(0) @ plus_proj).real)
    denom = float(np.trace(state.block(1)).real)
    measured = numer / denom
    if temperature == 0.0:
        expected = 0.0
    else:
        expected = float(np.exp(-CONSTANTS.hbar_over_kb * basis.lambda_gap / temperature))
    return measured, expected


def cooling_estimate(
    energy_rate: float, heat_capacity: float = GAAS_HEAT_CAPACITY
) -> CoolingEstimate:
    """Temperature slope (K/s) of a heat sink with the given capacity."""
    if heat_capacity <= 0:
        raise ValueError(f"heat capacity must be positive, got {heat_capacity}")
    return CoolingEstimate(
        energy_rate_si=energy_rate,
        heat_capacity=heat_capacity,
        temperature_slope=energy_rate / heat_capacity,
    )
