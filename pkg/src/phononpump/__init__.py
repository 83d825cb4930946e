"""Counting-statistics simulator for an optically driven two-level emitter
coupled to a thermal phonon bath."""

from .counting import (
    DistributionSnapshot,
    NumberResolvedState,
    Trajectory,
    WindowCapError,
    evolve,
    initial_state,
    snapshot_distribution,
    step_rk4,
)
from .model import (
    CONSTANTS,
    DressedBasis,
    PhysicalParams,
    dressed_basis,
    hamiltonian_matrix,
    phonon_rates,
    rwa_ratio,
    spectral_density,
    thermal_occupancy,
)
from .observables import (
    CoolingEstimate,
    SteadyStateReport,
    boltzmann_diagnostic,
    cooling_estimate,
    energy_rate_si,
    phonon_flux,
    reduced_density,
    steady_state,
)

__all__ = [
    "CONSTANTS",
    "CoolingEstimate",
    "DistributionSnapshot",
    "DressedBasis",
    "NumberResolvedState",
    "PhysicalParams",
    "SteadyStateReport",
    "Trajectory",
    "WindowCapError",
    "boltzmann_diagnostic",
    "cooling_estimate",
    "dressed_basis",
    "energy_rate_si",
    "evolve",
    "hamiltonian_matrix",
    "initial_state",
    "phonon_flux",
    "phonon_rates",
    "reduced_density",
    "rwa_ratio",
    "snapshot_distribution",
    "spectral_density",
    "steady_state",
    "step_rk4",
    "thermal_occupancy",
]
