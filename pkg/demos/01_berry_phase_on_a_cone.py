"""Berry phase of a spin following a field that sweeps out a cone."""
# %%
import numpy as np

from berry_concurrence import FieldConfig, closed_form_gamma, eigenstate_loop, wilson_loop_phase

# %% [markdown]
# The aligned eigenstate of ``n(t) . sigma`` traces a circle of latitude on the
# Bloch sphere.  Chopping the loop into N states and multiplying neighbouring
# overlaps gives a gauge-invariant estimate of the phase.

# %%
phi = np.pi / 3
cfg = FieldConfig(phi)
for n in (10, 100, 1000, 10_000):
    print(f"N={n:6d}  wilson={wilson_loop_phase(eigenstate_loop(cfg, n)):+.10f}")
print(f"closed form    {closed_form_gamma(phi)[0]:+.10f}")

# %% [markdown]
# The anti-aligned state sees the complementary solid angle, and the two
# phases always add up to -2 pi.

# %%
for phi in np.linspace(0, np.pi, 5):
    gp, gm = closed_form_gamma(phi)
    gw = wilson_loop_phase(eigenstate_loop(FieldConfig(phi), 2000, "down")) if 0 < phi < np.pi else gm
    print(f"phi={phi:.3f}  g+={gp:+.6f}  g-={gm:+.6f}  wilson(-)={gw:+.6f}  sum={gp + gm:+.6f}")
