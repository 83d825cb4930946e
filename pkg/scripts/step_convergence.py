#!/usr/bin/env python3
"""Empirical order check of the fixed-step integrator.

Halving the step should shrink the end-state error by ~16x (4th order).
"""

import numpy as np

from phononpump.counting import LadderGenerator, evolve, initial_state, step_rk4
from phononpump.model import PhysicalParams, dressed_basis


def end_state(params, basis, start, h, total):
    state = start
    gen = LadderGenerator(params, basis)
    for _ in range(int(round(total / h))):
        state = step_rk4(state, h, params, basis, generator=gen)
    return state.blocks


def main() -> None:
    params = PhysicalParams(
        omega_rabi=1.0, delta=1.0, alpha=0.25, temperature=10.0, gamma_decay=0.1
    )
    basis = dressed_basis(params)
    start = evolve(initial_state(), params, basis, 1.0).final_state

    steps = [0.08, 0.04, 0.02, 0.01, 0.005]
    reference = end_state(params, basis, start, steps[-1] / 8, 1.0)
    errors = [np.abs(end_state(params, basis, start, h, 1.0) - reference).max() for h in steps]

    print(f"{'h (ps)':>10} {'error':>12} {'ratio':>8}")
    for i, (h, err) in enumerate(zip(steps, errors)):
        ratio = errors[i - 1] / err if i else float("nan")
        print(f"{h:>10.4g} {err:>12.3e} {ratio:>8.2f}")


if __name__ == "__main__":
    main()
