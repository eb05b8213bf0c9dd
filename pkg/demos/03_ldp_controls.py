# Exponential functionals and their control representation.
#
# For independent Brownian particles and F = mean of tanh(x_T), the value
# -N^{-1} log E exp(-N F) does not depend on N and has a one-line quadrature.
# Every control gives an upper bound; a well-chosen feedback control also
# makes importance sampling work at large N, where plain Monte Carlo is
# dominated by a few replicas.

import numpy as np
from numpy.polynomial.hermite_e import hermegauss

from mflab.ldp import (DegenerateEstimateError, exp_functional_value, make_family,
                       mean_endpoint_tanh, optimize_control)
from mflab.model import get_model, make_grid, point_mass

model = get_model("zero")
grid = make_grid(1.0, 16)
init = point_mass(0.0)
F = mean_endpoint_tanh()

z, w = hermegauss(120)
exact = -np.log(np.sum(w / w.sum() * np.exp(-np.tanh(z))))
print(f"quadrature value: {exact:.5f}")

for N in (1, 8, 64):
    try:
        v = exp_functional_value(model, F, grid, N, init, 2000, seed=N)
        print(f"plain MC, N={N:<3d}  {v.value:.5f} +- {v.stderr:.5f}  (ESS {v.ess:.0f})")
    except DegenerateEstimateError as err:
        print(f"plain MC, N={N:<3d}  refused: {err}")

const, est_c = optimize_control(model, F, grid, 1, init, make_family("constant"), budget=40,
                                replicas=1000, eval_replicas=4000)
print(f"\nbest constant control {const[0]:+.3f}: cost {est_c.value:.5f} +- {est_c.stderr:.5f}")

fam = make_family("feedback_affine", features=("one", "t", "x", "tanh_x", "sech2_x", "t_x"))
theta, est_f = optimize_control(model, F, grid, 1, init, fam, budget=150, replicas=1000,
                                eval_replicas=4000)
print(f"feedback control: cost {est_f.value:.5f} +- {est_f.stderr:.5f}")

for N in (1, 8, 64, 256):
    v = exp_functional_value(model, F, grid, N, init, 2000, seed=10 + N,
                             method="importance_sampling", control=fam, params=theta)
    print(f"importance sampling, N={N:<3d}  {v.value:.5f} +- {v.stderr:.5f}  (ESS {v.ess:.0f})")
