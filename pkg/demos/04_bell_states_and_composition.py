"""Cycled Bell states, the Pancharatnam phase and three-spin composition."""
# %%
import numpy as np

from berry_concurrence.geometric import (
    bell_transition_matrix, closed_form_gamma, pancharatnam_overlap, sigma_matrix, three_spin_phase,
)

# %% [markdown]
# Antiparallel Bell states pick up opposite phases on their two branches.  In
# the Bell basis that is the SU(2) matrix ``exp(i gamma_+ sigma_x)``.

# %%
gp, _ = closed_form_gamma(np.pi / 5)
print(np.round(sigma_matrix(gp), 6))
print(np.allclose(bell_transition_matrix(gp), sigma_matrix(gp)))
print("at gamma_+ = -pi:", np.round(sigma_matrix(-np.pi).real, 12))

# %% [markdown]
# For ``alpha |dd> + beta |uu>`` the overlap after one cycle mixes the two
# branch phases, weighted by the populations.

# %%
for alpha, beta in ((1, 0), (1, 1), (2, 1j)):
    z, rec = pancharatnam_overlap(alpha, beta, gp)
    print(f"alpha={alpha!s:3} beta={beta!s:3}  overlap={z:.4f}  phase={rec.geometric:+.4f}")

# %%
value, phase = three_spin_phase((1, 1, 1), (0.3, -0.2, 0.1), (-0.5, 0.4, 0.0))
print(f"three-spin value={value:.4f} phase={phase:+.4f}")
