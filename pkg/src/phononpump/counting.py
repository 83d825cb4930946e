"""Number-resolved density-matrix ladder and its time evolution.

The joint state of the two-level system and the net number of phonons m
handed to the bath is stored as a finite window of 2x2 blocks rho_m,
m in [m_min, m_max]. Each block evolves under

    d rho_m / dt = -i [H, rho_m]
                   + gamma_down * (2 P rho_{m-1} P^dag - {P^dag P, rho_m})
                   + gamma_up   * (2 P^dag rho_{m+1} P - {P P^dag, rho_m})
                   + D[sigma_z, gamma_dephasing] rho_m
                   + D[sigma_minus, gamma_decay] rho_m

with P the phonon-assisted jump operator of the dressed basis: emitting a
phonon moves population up one rung (m-1 -> m), absorbing one moves it down.
The photon-decay and dephasing channels are not phonon-counted and act within
each block. Blocks outside the window are treated as zero; the window grows
adaptively whenever a boundary block accumulates more trace than
window_tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import algebra
from .model import DressedBasis, PhysicalParams, hamiltonian_matrix, phonon_rates

DEFAULT_WINDOW_TOLERANCE = 1e-12
DEFAULT_WINDOW_CAP = 512


class WindowCapError(RuntimeError):
    """Raised when adaptive window growth would exceed the hard cap."""


@dataclass
class NumberResolvedState:
    """Ladder of 2x2 blocks rho_m over the window [m_min, m_max]."""

    time: float
    m_min: int
    m_max: int
    blocks: np.ndarray  # shape (m_max - m_min + 1, 2, 2), complex
    window_tolerance: float = DEFAULT_WINDOW_TOLERANCE

    def block(self, m: int) -> np.ndarray:
        """The 2x2 block for phonon count m (zero outside the window)."""
        if m < self.m_min or m > self.m_max:
            return np.zeros((2, 2), dtype=complex)
        return self.blocks[m - self.m_min]

    @property
    def m_values(self) -> np.ndarray:
        return np.arange(self.m_min, self.m_max + 1)

    def probabilities(self) -> np.ndarray:
        """trace(rho_m) for each m in the window."""
        return np.einsum("kii->k", self.blocks).real


@dataclass(frozen=True)
class DistributionSnapshot:
    """Phonon-count distribution p_m at one instant."""

    time: float
    m_values: np.ndarray
    probabilities: np.ndarray
    mean: float
    variance: float


@dataclass(frozen=True)
class TrajectoryPoint:
    time: float
    distribution: DistributionSnapshot
    reduced: np.ndarray  # 2x2 reduced density matrix


@dataclass
class Trajectory:
    """Sampled records of an evolve run plus the final ladder state."""

    records: list[TrajectoryPoint] = field(default_factory=list)
    final_state: NumberResolvedState | None = None

    @property
    def times(self) -> np.ndarray:
        return np.array([rec.time for rec in self.records])


def initial_state(window_tolerance: float = DEFAULT_WINDOW_TOLERANCE) -> NumberResolvedState:
    """Ground state with zero exchanged phonons, window [-1, 1]."""
    blocks = np.zeros((3, 2, 2), dtype=complex)
    blocks[1] = algebra.GROUND_PROJECTOR
    return NumberResolvedState(
        time=0.0, m_min=-1, m_max=1, blocks=blocks, window_tolerance=window_tolerance
    )


class LadderGenerator:
    """Precomputed right-hand side of the counting master equation.

    The block-local part (Hamiltonian, anticommutator losses, uncounted
    dissipators) and the two neighbor couplings are stored as 4x4
    superoperators acting on column-stacked blocks, so one application is
    three (n, 4) @ (4, 4) products.
    """

    def __init__(self, params: PhysicalParams, basis: DressedBasis):
        gamma_down, gamma_up = phonon_rates(params, basis)
        self.gamma_down = gamma_down
        self.gamma_up = gamma_up
        p = basis.p_lambda
        pd = algebra.dagger(p)
        local = algebra.build_generator(
            [(algebra.SIGMA_Z, params.gamma_dephasing), (algebra.SIGMA_MINUS, params.gamma_decay)],
            hamiltonian_matrix(params),
        )
        local = local - gamma_down * algebra.anticommutator_superop(pd @ p)
        local = local - gamma_up * algebra.anticommutator_superop(p @ pd)
        # transposed so they right-multiply row-vectorized blocks
        self._local_t = local.T.copy()
        self._emit_t = (2.0 * gamma_down * algebra.sandwich_superop(p)).T.copy()
        self._absorb_t = (2.0 * gamma_up * algebra.sandwich_superop(pd)).T.copy()

    def apply(self, stacked: np.ndarray) -> np.ndarray:
        """Derivative of the (n, 4) column-stacked ladder."""
        out = stacked @ self._local_t
        out[1:] += stacked[:-1] @ self._emit_t
        out[:-1] += stacked[1:] @ self._absorb_t
        return out


def _stack(blocks: np.ndarray) -> np.ndarray:
    # (n, 2, 2) -> (n, 4) column-stacked per block
    return blocks.transpose(0, 2, 1).reshape(blocks.shape[0], 4)


def _unstack(stacked: np.ndarray) -> np.ndarray:
    return stacked.reshape(stacked.shape[0], 2, 2).transpose(0, 2, 1)


def generator_apply(
    state: NumberResolvedState, params: PhysicalParams, basis: DressedBasis
) -> np.ndarray:
    """Time derivative of every block in the window, shape (n, 2, 2)."""
    gen = LadderGenerator(params, basis)
    return _unstack(gen.apply(_stack(state.blocks)))


def default_step(params: PhysicalParams, basis: DressedBasis) -> float:
    """Fixed RK4 step resolving both the dressed splitting and the fastest rate."""
    gamma_down, gamma_up = phonon_rates(params, basis)
    rate_sum = gamma_down + gamma_up + params.gamma_decay + params.gamma_dephasing
    return min(0.01 / basis.lambda_gap, 0.01 / (rate_sum + 1e-30), 0.01)


def _rk4(gen: LadderGenerator, stacked: np.ndarray, h: float) -> np.ndarray:
    k1 = gen.apply(stacked)
    k2 = gen.apply(stacked + (0.5 * h) * k1)
    k3 = gen.apply(stacked + (0.5 * h) * k2)
    k4 = gen.apply(stacked + h * k3)
    return stacked + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def step_rk4(
    state: NumberResolvedState,
    h: float,
    params: PhysicalParams,
    basis: DressedBasis,
    generator: LadderGenerator | None = None,
) -> NumberResolvedState:
    """Advance the ladder by one classical Runge-Kutta step of size h."""
    if h <= 0:
        raise ValueError(f"step size must be positive, got {h}")
    gen = generator if generator is not None else LadderGenerator(params, basis)
    stacked = _rk4(gen, _stack(state.blocks), h)
    return NumberResolvedState(
        time=state.time + h,
        m_min=state.m_min,
        m_max=state.m_max,
        blocks=_unstack(stacked),
        window_tolerance=state.window_tolerance,
    )


def snapshot_distribution(state: NumberResolvedState) -> DistributionSnapshot:
    """Probabilities p_m = trace(rho_m) with their mean and variance."""
    probs = state.probabilities()
    m = state.m_values.astype(float)
    mean = float(np.dot(m, probs))
    variance = float(np.dot(m * m, probs) - mean * mean)
    return DistributionSnapshot(
        time=state.time,
        m_values=state.m_values,
        probabilities=probs,
        mean=mean,
        variance=variance,
    )


def _boundary_traces(stacked: np.ndarray) -> tuple[float, float]:
    return abs(stacked[0, 0] + stacked[0, 3]), abs(stacked[-1, 0] + stacked[-1, 3])


def evolve(
    state: NumberResolvedState,
    params: PhysicalParams,
    basis: DressedBasis,
    duration: float,
    h: float | None = None,
    sample_times: list[float] | None = None,
    window_cap: int = DEFAULT_WINDOW_CAP,
) -> Trajectory:
    """Integrate the counting master equation for `duration` picoseconds.

    Snapshots are recorded at the requested sample_times (defaults to the end
    of the run only); the last step before each sample is shortened so the
    samples land exactly. After each step the window is widened by one index
    on any side whose boundary trace exceeds window_tolerance; growth past
    window_cap raises WindowCapError.
    """
    if duration <= 0:
        raise ValueError(f"duration must be positive, got {duration}")
    if h is None:
        h = default_step(params, basis)
    if sample_times is None:
        samples = [duration]
    else:
        samples = sorted(float(t) for t in sample_times)
        if len(set(samples)) != len(samples):
            raise ValueError("sample times must be distinct")
        if samples and (samples[0] < 0 or samples[-1] > duration + 1e-12):
            raise ValueError("sample times must lie within [0, duration]")

    gen = LadderGenerator(params, basis)
    stacked = _stack(state.blocks)
    m_min, m_max = state.m_min, state.m_max
    t = state.time
    t_end = state.time + duration
    tol = state.window_tolerance

    trajectory = Trajectory()

    def record() -> None:
        snap_state = NumberResolvedState(
            time=t, m_min=m_min, m_max=m_max, blocks=_unstack(stacked), window_tolerance=tol
        )
        snap = snapshot_distribution(snap_state)
        trajectory.records.append(
            TrajectoryPoint(time=t, distribution=snap, reduced=snap_state.blocks.sum(axis=0))
        )

    targets = [(state.time + s, True) for s in samples]
    if targets and abs(targets[0][0] - state.time) < 1e-15:
        record()
        targets = targets[1:]
    if not targets or targets[-1][0] < t_end - 1e-12:
        targets.append((t_end, False))

    def grow(side_trace: float, side: str) -> None:
        nonlocal stacked, m_min, m_max
        if side == "low" and m_min - 1 < -window_cap or side == "high" and m_max + 1 > window_cap:
            raise WindowCapError(
                f"phonon window hit the cap |m| <= {window_cap} at t = {t:.6g} ps "
                f"(window [{m_min}, {m_max}], boundary trace {side_trace:.3g})"
            )
        pad = np.zeros((1, 4), dtype=complex)
        if side == "low":
            stacked = np.vstack([pad, stacked])
            m_min -= 1
        else:
            stacked = np.vstack([stacked, pad])
            m_max += 1

    for target, is_sample in targets:
        while t < target - 1e-12:
            step = min(h, target - t)
            stacked = _rk4(gen, stacked, step)
            t += step
            low, high = _boundary_traces(stacked)
            if low > tol:
                grow(low, "low")
            if high > tol:
                grow(high, "high")
        t = target
        if is_sample:
            record()

    trajectory.final_state = NumberResolvedState(
        time=t, m_min=m_min, m_max=m_max, blocks=_unstack(stacked), window_tolerance=tol
    )
    return trajectory
