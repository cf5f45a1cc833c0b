"""Pair concurrence against the chain monogamy bound."""
# %%
import numpy as np

from berry_concurrence import general_concurrence, monogamy_report, partial_trace, wootters_concurrence

# %% [markdown]
# In a chain of n spins each site can share at most ``1 / (n - 1)`` of its
# entanglement with any one neighbour in the symmetric case.

# %%
for n in (2, 3, 4, 8, 16):
    print(f"n={n:2d}  critical C12={monogamy_report(0.0, n).critical_c12:.4f}")

# %% [markdown]
# The three-spin W state has ``C12 = 2/3`` for every pair, while the tangle
# between one spin and the rest is ``2 sqrt(2) / 3``.  The report flags it.

# %%
w = np.zeros(8, dtype=complex)
w[[1, 2, 4]] = 1 / np.sqrt(3)
rho = np.outer(w, w.conj()).reshape(4, 2, 4, 2)
rho12 = np.einsum("aibi->ab", rho)  # trace out spin 3
c12 = wootters_concurrence(rho12)
print(f"C12 = {c12:.6f}")
print(monogamy_report(c12, 3, 2 * np.sqrt(2) / 3))

# %%
bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
print("Bell pair:", general_concurrence(bell), "reduced state", partial_trace(np.outer(bell, bell), "A").real)
