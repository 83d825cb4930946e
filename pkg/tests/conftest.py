"""Shared hypothesis strategies for matrix-valued properties."""

import numpy as np
from hypothesis import strategies as st

finite_floats = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False)


@st.composite
def complex_matrices(draw):
    entries = draw(st.lists(finite_floats, min_size=8, max_size=8))
    values = np.array(entries, dtype=float)
    return values[:4].reshape(2, 2) + 1j * values[4:].reshape(2, 2)


@st.composite
def hermitian_matrices(draw):
    m = draw(complex_matrices())
    return 0.5 * (m + m.conj().T)


@st.composite
def density_matrices(draw):
    m = draw(complex_matrices())
    rho = m @ m.conj().T + 1e-3 * np.eye(2)
    return rho / np.trace(rho).real
