import numpy as np
import pytest
from hypothesis import given

from conftest import complex_matrices, hermitian_matrices
from phononpump import algebra
from phononpump.algebra import (
    IDENTITY,
    SIGMA_MINUS,
    SIGMA_PLUS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    build_generator,
    commutator,
    dagger,
    devectorize,
    dissipator_apply,
    vectorize,
)


def test_dagger_hermitian_fixed_point():
    assert np.array_equal(dagger(SIGMA_Z), SIGMA_Z)


def test_dagger_lowering_gives_raising():
    assert np.array_equal(dagger(SIGMA_MINUS), SIGMA_PLUS)


@given(complex_matrices())
def test_dagger_is_involution(m):
    assert np.array_equal(dagger(dagger(m)), m)


def test_commutator_self_vanishes():
    assert np.allclose(commutator(SIGMA_Z, SIGMA_Z), 0.0)


def test_commutator_pauli_algebra():
    assert np.allclose(commutator(SIGMA_Z, SIGMA_X), 2j * SIGMA_Y, atol=1e-12)


@given(complex_matrices())
def test_commutator_with_identity_vanishes(m):
    assert np.allclose(commutator(m, IDENTITY), 0.0, atol=1e-12)


def test_dissipator_pure_decay():
    excited = np.array([[0, 0], [0, 1]], dtype=complex)
    deriv = dissipator_apply(SIGMA_MINUS, 1.0, excited)
    assert deriv[1, 1].real == pytest.approx(-1.0, abs=1e-12)
    assert deriv[0, 0].real == pytest.approx(1.0, abs=1e-12)


def test_dissipator_dephasing_ignores_populations():
    rho = np.diag([0.3, 0.7]).astype(complex)
    assert np.allclose(dissipator_apply(SIGMA_Z, 2.5, rho), 0.0, atol=1e-12)


def test_dissipator_rejects_negative_rate():
    with pytest.raises(ValueError):
        dissipator_apply(SIGMA_MINUS, -0.1, np.eye(2, dtype=complex))


@given(complex_matrices(), hermitian_matrices())
def test_dissipator_output_traceless(jump, rho):
    deriv = dissipator_apply(jump, 0.8, rho)
    assert abs(np.trace(deriv)) < 1e-12


@given(complex_matrices(), hermitian_matrices())
def test_dissipator_preserves_hermiticity(jump, rho):
    deriv = dissipator_apply(jump, 1.3, rho)
    assert np.abs(deriv - dagger(deriv)).max() < 1e-12


@given(complex_matrices())
def test_vectorize_round_trip_exact(m):
    assert np.array_equal(devectorize(vectorize(m)), m)


def test_vectorize_column_stacking_order():
    m = np.array([[1, 3], [2, 4]], dtype=complex)
    assert np.array_equal(vectorize(m), np.array([1, 2, 3, 4], dtype=complex))


def _random_jumps_and_h(rng):
    def cmat():
        return rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))

    h = cmat()
    h = 0.5 * (h + h.conj().T)
    jumps = [(cmat(), float(rng.uniform(0, 2))) for _ in range(3)]
    return jumps, h


def test_build_generator_matches_direct_rhs():
    # oracle: assemble the right-hand side directly from matrix products
    rng = np.random.default_rng(7)
    jumps, h = _random_jumps_and_h(rng)
    gen = build_generator(jumps, h)
    for _ in range(100):
        rho = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        direct = -1j * commutator(h, rho)
        for jump, gamma in jumps:
            direct += dissipator_apply(jump, gamma, rho)
        assert np.abs(devectorize(gen @ vectorize(rho)) - direct).max() < 1e-12


def test_build_generator_empty_is_zero():
    gen = build_generator([], np.zeros((2, 2), dtype=complex))
    assert np.array_equal(gen, np.zeros((4, 4), dtype=complex))


def test_build_generator_annihilates_trace_functional():
    rng = np.random.default_rng(21)
    jumps, h = _random_jumps_and_h(rng)
    gen = build_generator(jumps, h)
    assert np.abs(vectorize(IDENTITY).conj() @ gen).max() < 1e-12


def test_build_generator_rejects_negative_rate():
    with pytest.raises(ValueError):
        build_generator([(SIGMA_MINUS, -1.0)], np.zeros((2, 2), dtype=complex))


@given(complex_matrices(), complex_matrices())
def test_generator_action_is_linear(a, b):
    gen = build_generator([(SIGMA_MINUS, 0.4), (SIGMA_Z, 0.2)], 0.5 * SIGMA_X)
    lhs = gen @ (vectorize(a) + vectorize(b))
    rhs = gen @ vectorize(a) + gen @ vectorize(b)
    assert np.abs(lhs - rhs).max() < 1e-12
