"""
How long until the walk hits zero
=================================

The number of deletions made by one Random-deletion pass behaves like the
hitting time of a fair walk.  Exact pmf against simulation.
"""

import numpy as np

from dyckrepair.randomwalk import (hitting_pmf_array, lower_bound_A, simulate,
                                   window_prob)
from dyckrepair.rng import substream

d, cap, trials = 3, 40, 100_000
exact = hitting_pmf_array(d, cap)
counts, censored = simulate(d, cap, trials, substream(1))
empirical = counts / trials

print(" D   exact     simulated")
for D in range(d, 20, 2):
    print(f"{D:>2}  {exact[D]:.5f}   {empirical[D]:.5f}")
print("censored after", cap, "steps:", censored / trials)

# probability of hitting 0 inside [d^2, 2 d^2], against its limiting value
for d in (2, 3, 5, 10, 25):
    print(d, round(window_prob(d, d * d, 2 * d * d), 4),
          round(window_prob(d, 1, 2 * d * d), 4))
print("A(2) =", round(lower_bound_A(2), 5))

grid = np.linspace(0.05, 3, 8)
print(np.round([lower_bound_A(a) for a in grid], 4))
