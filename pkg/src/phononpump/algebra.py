"""Dense complex 2x2 matrix algebra and vectorized superoperators.

Basis ordering is (|g>, |e>) everywhere in this package, so
sigma_z = |e><e| - |g><g| is diag(-1, +1) and sigma_minus = |g><e| has its
single nonzero entry in the upper right. Vectorization stacks columns
(Fortran order); with that convention vec(A X B) = kron(B.T, A) vec(X).
"""

from __future__ import annotations

import numpy as np

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, 1.0j], [-1.0j, 0.0]], dtype=complex)  # completes the (g, e) triple
SIGMA_Z = np.array([[-1.0, 0.0], [0.0, 1.0]], dtype=complex)
SIGMA_MINUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
SIGMA_PLUS = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)

GROUND_PROJECTOR = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
EXCITED_PROJECTOR = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex)


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """A B - B A."""
    return a @ b - b @ a


def dissipator_apply(jump: np.ndarray, gamma: float, rho: np.ndarray) -> np.ndarray:
    """Apply the dissipator gamma * (L rho L^dag - {L^dag L, rho} / 2).

    gamma is a nonnegative rate in ps^-1.
    """
    if gamma < 0:
        raise ValueError(f"dissipator rate must be nonnegative, got {gamma}")
    jd = jump.conj().T
    jdj = jd @ jump
    return gamma * (jump @ rho @ jd - 0.5 * (jdj @ rho + rho @ jdj))


def vectorize(rho: np.ndarray) -> np.ndarray:
    """Column-stack a 2x2 matrix into a length-4 vector."""
    return np.asarray(rho, dtype=complex).flatten(order="F")


def devectorize(vec: np.ndarray) -> np.ndarray:
    """Inverse of vectorize."""
    return np.asarray(vec, dtype=complex).reshape((2, 2), order="F")


def sandwich_superop(jump: np.ndarray) -> np.ndarray:
    """4x4 matrix S with S vec(rho) = vec(L rho L^dag)."""
    return np.kron(jump.conj(), jump)


def anticommutator_superop(op: np.ndarray) -> np.ndarray:
    """4x4 matrix S with S vec(rho) = vec(A rho + rho A)."""
    return np.kron(IDENTITY, op) + np.kron(op.T, IDENTITY)


def hamiltonian_superop(h: np.ndarray) -> np.ndarray:
    """4x4 matrix S with S vec(rho) = vec(-i [H, rho])."""
    return -1.0j * (np.kron(IDENTITY, h) - np.kron(h.T, IDENTITY))


def build_generator(jumps: list[tuple[np.ndarray, float]], h: np.ndarray) -> np.ndarray:
    """Vectorized generator of a Lindblad equation.

    Returns the 4x4 matrix G with G vec(rho) = vec(-i[H, rho] + sum of
    dissipator_apply(L, gamma, rho) over the (L, gamma) jump terms).
    """
    gen = hamiltonian_superop(h)
    for jump, gamma in jumps:
        if gamma < 0:
            raise ValueError(f"dissipator rate must be nonnegative, got {gamma}")
        jdj = jump.conj().T @ jump
        gen = gen + gamma * (sandwich_superop(jump) - 0.5 * anticommutator_superop(jdj))
    return gen
