"""Concurrence of the pair state against the flux factor |b|."""
# %%
import numpy as np

from berry_concurrence import concurrence_from_phi, spin_model_catalog, wootters_concurrence
from berry_concurrence.entanglement import coefficients_from_phi

# %% [markdown]
# With amplitudes fixed by the cone angle, ``2 |alpha beta|`` equals
# ``|b| = (1 - cos phi) / 2``.  The concurrence of the normalized state is
# smaller in between the end points, so both columns are printed.

# %%
print("  phi      |b|     C raw   C normalized")
for phi in np.linspace(0, np.pi, 9):
    r = concurrence_from_phi(phi)
    print(f"{phi:5.3f}  {r.abs_b:.5f}  {r.paper_c:.5f}  {r.wootters_c:.5f}")

# %%
for entry in spin_model_catalog():
    print(f"{entry.label:32s} phi={entry.phi:.4f}  C={entry.c}")

# %% [markdown]
# The normalized value can be checked directly from the state vector.

# %%
pair = coefficients_from_phi(np.pi / 2)
print("state", np.round(pair.state, 6), "C =", wootters_concurrence(pair.state))
