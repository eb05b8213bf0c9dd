# Particles versus their mean-field surrogates, and the Euler scheme on its own.
#
# Each particle is coupled to a surrogate that sees the same initial value
# and the same Brownian path, but feels a large independent reference
# ensemble instead of its N - 1 companions.  The squared sup-distance between
# the two should decay like 1/N.

import numpy as np

from mflab.fluctuations import coupled_difference
from mflab.metrics import rate_slope
from mflab.model import InitialLaw, NoiseSource, get_model, make_grid
from mflab.solver import simulate_particles, strong_error

init = InitialLaw("gaussian", (0.0,), 1.0)
grid = make_grid(1.0, 16)
model = get_model("bounded_tanh")

# one run of the particle system; re-solving every particle against the
# run's own empirical measure gives back the same numbers bit for bit
x0 = init.sample(64, seed=0, stream_id=0)
W = NoiseSource("brownian", 1, seed=0).block(grid, 64)
run = simulate_particles(model, grid, x0, W)
print("fixed point reproduced exactly:", run.is_fixed_point())

print("\nN      E sup|delta|^2")
pts = []
for N in (32, 64, 128, 256):
    ms, se = coupled_difference(model, grid, N, init, NoiseSource("brownian", 1, 1),
                                replicas=50).mean_square()
    pts.append((N, ms))
    print(f"{N:<6d} {ms:.3e} +- {se:.1e}")
fit = rate_slope(pts)
print(f"slope in N: {fit.slope:.2f}  (r2 {fit.r2:.3f})")

# strong error of the scheme against a fine grid driven by the same noise
steps = [8, 16, 32, 64, 128]
err, se = strong_error(model, 1.0, steps, 1024, 16, init, replicas=8)
fit = rate_slope([(1 / s, e) for s, e in zip(steps, err)])
print("\nsteps  E sup|X^h - X^fine|^2")
for s, e in zip(steps, err):
    print(f"{s:<6d} {e:.3e}")
print(f"slope in h: {fit.slope:.2f}")
print("mean endpoint of the run above:", np.round(run.values[:, -1, 0].mean(), 4))
