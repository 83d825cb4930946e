"""Acceptance suite: every headline criterion at its stated tolerance.

Each test prints one `ACCEPTANCE <name>: PASS/FAIL` line; run with
`pytest tests/test_acceptance.py -v -s` to see them all.
"""

import math
import time

import numpy as np
import pytest

from phononpump.model import (
    CONSTANTS,
    PhysicalParams,
    dressed_basis,
    phonon_energy_si,
)
from phononpump.counting import evolve, initial_state
from phononpump.observables import (
    boltzmann_diagnostic,
    cooling_estimate,
    phonon_flux,
    steady_state,
)


def report(name: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{name}: {detail}"


def make_params(**kw):
    base = dict(omega_rabi=1.0, delta=1.0, alpha=0.25, cutoff=None, temperature=10.0,
                gamma_decay=0.0, gamma_dephasing=0.0)
    base.update(kw)
    return PhysicalParams(**base)


@pytest.fixture(scope="module")
def headline_point():
    params = make_params(temperature=20.0, gamma_decay=0.1)
    basis = dressed_basis(params)
    start = time.perf_counter()
    result = steady_state(params, basis)
    elapsed = time.perf_counter() - start
    return params, basis, result, elapsed


@pytest.fixture(scope="module")
def boltzmann_run():
    # phonon channel only: no radiative decay, no dephasing
    params = make_params(delta=0.0)
    basis = dressed_basis(params)
    start = time.perf_counter()
    trajectory = evolve(
        initial_state(), params, basis, 200.0,
        sample_times=list(np.linspace(10.0, 200.0, 20)),
    )
    elapsed = time.perf_counter() - start
    return params, basis, trajectory, elapsed


@pytest.fixture(scope="module")
def oracle_run():
    params = make_params(gamma_decay=0.1)
    basis = dressed_basis(params)
    times = np.round(np.arange(0.0, 50.0 + 1e-9, 0.01), 10)
    trajectory = evolve(
        initial_state(), params, basis, 50.0, h=0.001, sample_times=list(times)
    )
    return params, basis, trajectory, times


@pytest.fixture(scope="module")
def rabi_run():
    params = make_params(delta=0.0, alpha=0.0)
    basis = dressed_basis(params)
    times = list(np.linspace(0.0, 30.0, 301))
    trajectory = evolve(initial_state(), params, basis, 30.0, sample_times=times)
    return params, basis, trajectory


def test_headline_cooling_flux(headline_point):
    _, _, result, elapsed = headline_point
    ok = -0.025 <= result.flux <= -0.015 and elapsed < 1.0
    report(
        "headline-cooling-flux", ok,
        f"flux = {result.flux:.6g} ps^-1, target -0.02 +/- 25%, solve took {elapsed * 1e3:.2f} ms",
    )


def test_energy_rate_and_phonon_energy(headline_point):
    _, basis, result, _ = headline_point
    rate = abs(result.energy_rate_si)
    energy = phonon_energy_si(basis.lambda_gap)
    ok = 0.75 * 3e-12 <= rate <= 1.25 * 3e-12 and abs(energy - 1.49e-22) / 1.49e-22 < 5e-3
    report(
        "energy-rate", ok,
        f"|Edot| = {rate:.4g} W (target 3e-12 +/- 25%), hbar*Lambda = {energy:.6g} J "
        f"(target 1.49e-22 +/- 0.5%)",
    )


def test_cooling_slope(headline_point):
    _, _, result, _ = headline_point
    recomputed_capacity = 5.3e3 * 350.0 * 1e-18
    estimate = cooling_estimate(result.energy_rate_si)
    slope = abs(estimate.temperature_slope)
    ok = (
        0.5 <= slope <= 5.0
        and abs(recomputed_capacity - 1.85e-12) / 1.85e-12 < 0.01
    )
    report(
        "cooling-slope", ok,
        f"|slope| = {slope:.4g} K/s (target order 1, window [0.5, 5]); "
        f"capacity from material constants = {recomputed_capacity:.4g} J/K vs 1.85e-12",
    )


def test_resonant_flux_is_never_negative():
    fluxes = {}
    for temperature in (0.0, 4.0, 10.0, 20.0, 40.0):
        params = make_params(delta=0.0, temperature=temperature, gamma_decay=0.1)
        fluxes[temperature] = steady_state(params, dressed_basis(params)).flux
    ok = all(flux >= -1e-12 for flux in fluxes.values())
    report(
        "resonance-sign", ok,
        "flux(delta=0) by T: " + ", ".join(f"{t:g} K: {f:.3g}" for t, f in fluxes.items()),
    )


def test_boltzmann_limit(boltzmann_run):
    params, basis, trajectory, elapsed = boltzmann_run
    measured, expected = boltzmann_diagnostic(trajectory, basis, params.temperature)
    ok = abs(measured - expected) < 1e-3 and elapsed < 10.0
    report(
        "boltzmann-limit", ok,
        f"measured {measured:.6f} vs exp(-beta*Lambda) = {expected:.6f} "
        f"(|diff| = {abs(measured - expected):.2e}), run took {elapsed:.2f} s",
    )


def test_flux_formula_matches_counting_ladder(oracle_run):
    params, basis, trajectory, times = oracle_run
    means = np.array([r.distribution.mean for r in trajectory.records])
    fluxes = np.array([phonon_flux(r.reduced, params, basis) for r in trajectory.records])
    dt = times[1] - times[0]
    derivative = (means[2:] - means[:-2]) / (2 * dt)
    relative = np.abs(derivative - fluxes[1:-1]).max() / np.abs(fluxes).max()
    ok = relative < 1e-3
    report(
        "flux-oracle-equivalence", ok,
        f"sup |d<m>/dt - flux| / sup |flux| = {relative:.2e} over 50 ps at h = 0.001 ps",
    )


def test_single_phonon_structure(boltzmann_run):
    _, _, trajectory, _ = boltzmann_run
    worst = 0.0
    for record in trajectory.records:
        outside = np.abs(record.distribution.m_values) >= 2
        if outside.any():
            worst = max(worst, np.abs(record.distribution.probabilities[outside]).max())
    ok = worst < 1e-12
    report("single-phonon-structure", ok, f"max p_m over |m| >= 2 at all samples = {worst:.2e}")


def test_dephasing_only_flux_is_never_negative():
    fluxes = []
    for delta in np.linspace(-3.0, 3.0, 25):
        params = make_params(delta=float(delta), gamma_dephasing=0.05)
        fluxes.append(steady_state(params, dressed_basis(params)).flux)
    ok = min(fluxes) >= -1e-12
    report(
        "dephasing-direction", ok,
        f"min flux over delta in [-3, 3] = {min(fluxes):.4g} (gamma_dephasing = 0.05)",
    )


def test_absorption_magnitude_saturates_with_decay():
    gammas = np.logspace(math.log10(0.01), 0.0, 15)
    magnitudes = []
    for gamma in gammas:
        params = make_params(gamma_decay=float(gamma))
        magnitudes.append(abs(steady_state(params, dressed_basis(params)).flux))
    ok = all(b >= a - 1e-12 for a, b in zip(magnitudes, magnitudes[1:]))
    report(
        "inset-trend", ok,
        f"|flux| rises from {magnitudes[0]:.4g} to {magnitudes[-1]:.4g} "
        "over gamma_decay in [0.01, 1]",
    )


def test_rabi_oracle(rabi_run):
    params, _, trajectory = rabi_run
    worst = 0.0
    for record in trajectory.records:
        expected = math.sin(0.5 * params.omega_rabi * record.time) ** 2
        worst = max(worst, abs(record.reduced[1, 1].real - expected))
    ok = worst < 1e-6
    report("rabi-oracle", ok, f"max |rho_ee - sin^2(Omega t / 2)| = {worst:.2e} at default step")


def test_conservation_suite(headline_point, boltzmann_run, oracle_run, rabi_run):
    worst_drift = 0.0
    worst_herm = 0.0
    worst_eig = 0.0
    for _, _, trajectory, *_ in (boltzmann_run, oracle_run, rabi_run):
        final = trajectory.final_state
        worst_drift = max(worst_drift, abs(final.probabilities().sum() - 1.0))
        worst_herm = max(
            worst_herm, np.abs(final.blocks - final.blocks.conj().transpose(0, 2, 1)).max()
        )
        for record in trajectory.records:
            reduced = record.reduced
            worst_herm = max(worst_herm, np.abs(reduced - reduced.conj().T).max())
            worst_eig = min(worst_eig, np.linalg.eigvalsh(0.5 * (reduced + reduced.conj().T)).min())
            worst_drift = max(worst_drift, abs(record.distribution.probabilities.sum() - 1.0))
    _, _, result, _ = headline_point
    worst_eig = min(worst_eig, np.linalg.eigvalsh(result.rho_ss).min())
    ok = worst_drift < 1e-9 and worst_herm < 1e-10 and worst_eig > -1e-9
    report(
        "conservation-suite", ok,
        f"trace drift {worst_drift:.2e} (< 1e-9), hermiticity {worst_herm:.2e} (< 1e-10), "
        f"min eigenvalue {worst_eig:.2e} (> -1e-9)",
    )
