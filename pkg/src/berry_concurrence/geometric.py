"""
Geometric phases of single spins, entangled pairs and Bell states.

Two sign conventions are used.  Loop phases that are compared against the
closed forms ``gamma_+ = -pi (1 - cos phi)`` and ``gamma_- = -pi (1 + cos phi)``
are reported on the branch ``(-2 pi, 0]``, where both closed forms live.
Phases read off a single complex overlap (Pancharatnam and three-spin
composition) are principal arguments in ``(-pi, pi]``.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePath, DomainError, ZeroState, ZeroVisibility
from .linalg import I2, SX
from .spin import _check_tilt, half_versine

__all__ = [
    "PhaseRecord", "TWO_PI", "wrap_negative", "wrap_principal", "angle_distance",
    "closed_form_gamma", "wilson_loop_phase", "eigenstate_loop", "entangled_loop",
    "pancharatnam_overlap", "composition_raw", "sigma_matrix", "bell_state",
    "bell_evolve", "bell_transition_matrix", "three_spin_phase",
]

TWO_PI = 2.0 * np.pi
VISIBILITY_FLOOR = 1e-12


@dataclass(frozen=True)
class PhaseRecord:
    """Accumulated phase split into geometric and dynamical parts.

    ``total`` equals ``geometric + dynamical`` modulo 2 pi; ``visibility`` is
    the modulus of the overlap the phase was read from.
    """

    geometric: float
    dynamical: float
    total: float
    visibility: float


def wrap_negative(x, snap=1e-9):
    """Map an angle onto ``(-2 pi, 0]``.

    Angles within ``snap`` above a multiple of 2 pi are returned as 0 rather
    than as a value just above -2 pi, so roundoff around zero stays at zero.
    """
    r = float(np.mod(x, TWO_PI))
    return r - TWO_PI if r > snap else 0.0


def wrap_principal(x):
    """Map an angle onto ``(-pi, pi]``."""
    r = float(np.mod(x + np.pi, TWO_PI)) - np.pi
    return np.pi if r == -np.pi else r


def angle_distance(a, b):
    """Distance between two angles on the circle, in ``[0, pi]``."""
    return abs(wrap_principal(a - b))


def closed_form_gamma(phi):
    """Berry phases ``(gamma_+, gamma_-)`` of the aligned and anti-aligned states."""
    _check_tilt(phi)
    # -2 pi * half-versine is -pi (1 - cos phi) without cancellation; + 0.0 drops a -0.0
    gamma_plus = -TWO_PI * float(half_versine(phi)) + 0.0
    gamma_minus = -TWO_PI - gamma_plus
    return gamma_plus, gamma_minus


def wilson_loop_phase(path, closed=True):
    """Discrete Berry phase ``-arg prod_k <psi_k|psi_{k+1}>``.

    The argument of every segment overlap is taken in ``(-pi, pi]`` and the
    segments are summed before the result is mapped onto ``(-2 pi, 0]``.
    For a closed loop the result does not depend on the phase of any
    individual state.

    Parameters
    ----------
    path : array_like, shape (N, d)
        Ordered states along the loop, N >= 3.  For a closed loop the
        starting state must not be repeated at the end.
    closed : bool
        Include the segment from the last state back to the first.
    """
    path = np.asarray(path, dtype=complex)
    if path.ndim != 2 or len(path) < 3:
        raise DomainError("a loop needs at least three states")
    nxt = np.roll(path, -1, axis=0) if closed else path[1:]
    cur = path if closed else path[:-1]
    overlaps = np.einsum("ij,ij->i", cur.conj(), nxt)
    if np.min(np.abs(overlaps)) < 1e-12:
        raise DegeneratePath("consecutive states on the path are orthogonal")
    return wrap_negative(-np.sum(np.angle(overlaps)))


def eigenstate_loop(cfg, samples, branch="up"):
    """Instantaneous eigenstates at ``t_k = k tau / samples``, k < samples."""
    t = cfg.period * np.arange(samples) / samples
    c, s = np.cos(cfg.phi / 2), np.sin(cfg.phi / 2)
    e = np.exp(1j * cfg.omega0 * t)
    if branch == "up":
        return np.stack([np.full_like(e, c), s * e], axis=1)
    if branch == "down":
        return np.stack([np.full_like(e, -s), c * e], axis=1)
    raise ValueError(f"branch must be 'up' or 'down', got {branch!r}")


def entangled_loop(alpha, beta, cfg, samples):
    """Loop of ``(alpha |dd> + beta |uu>) / sqrt(M)`` built from the
    instantaneous eigenstates, both spins following the field."""
    m = abs(alpha) ** 2 + abs(beta) ** 2
    if m == 0.0:
        raise ZeroState("alpha and beta are both zero")
    up = eigenstate_loop(cfg, samples, "up")
    dn = eigenstate_loop(cfg, samples, "down")
    uu = np.einsum("ki,kj->kij", up, up).reshape(samples, 4)
    dd = np.einsum("ki,kj->kij", dn, dn).reshape(samples, 4)
    return (alpha * dd + beta * uu) / np.sqrt(m)


def pancharatnam_overlap(alpha, beta, gamma_plus):
    """Overlap ``<psi(0)|psi(tau)>`` of the cycled pair state and its phase.

    ``(|alpha|^2 e^{-2 i gamma_+} + |beta|^2 e^{2 i gamma_+}) / M``, using
    ``e^{2 i gamma_-} = e^{-2 i gamma_+}``.  The dynamical phase is taken as
    already removed, so ``record.total == record.geometric``.
    """
    a2, b2 = abs(alpha) ** 2, abs(beta) ** 2
    m = a2 + b2
    if m == 0.0:
        raise ZeroState("alpha and beta are both zero")
    overlap = complex((a2 * np.exp(-2j * gamma_plus) + b2 * np.exp(2j * gamma_plus)) / m)
    vis = abs(overlap)
    if vis < VISIBILITY_FLOOR:
        raise ZeroVisibility("overlap vanishes; the Pancharatnam phase is undefined")
    g = wrap_principal(np.angle(overlap))
    return overlap, PhaseRecord(geometric=g, dynamical=0.0, total=g, visibility=min(vis, 1.0))


def composition_raw(alpha, beta, gamma_plus):
    """Literal ``alpha e^{-2 i gamma_+} + beta e^{2 i gamma_+}``.

    Linear in the amplitudes, so in general not of unit modulus; kept for
    comparison with :func:`pancharatnam_overlap`.
    """
    return complex(alpha * np.exp(-2j * gamma_plus) + beta * np.exp(2j * gamma_plus))


def sigma_matrix(gamma_plus):
    """Bell-basis phase matrix ``exp(i gamma_+ sigma_x)``."""
    return np.cos(gamma_plus) * I2 + 1j * np.sin(gamma_plus) * SX


_UD = np.array([0, 1, 0, 0], dtype=complex)
_DU = np.array([0, 0, 1, 0], dtype=complex)


def bell_state(which):
    """One of ``"phi+", "phi-", "psi+", "psi-"``; ``"plus"``/``"minus"`` alias the psi pair."""
    r = 1.0 / np.sqrt(2.0)
    states = {
        "phi+": np.array([r, 0, 0, r], dtype=complex),
        "phi-": np.array([r, 0, 0, -r], dtype=complex),
        "psi+": r * (_UD + _DU),
        "psi-": r * (_UD - _DU),
    }
    states["plus"], states["minus"] = states["psi+"], states["psi-"]
    try:
        return states[which]
    except KeyError:
        raise ValueError(f"unknown Bell state {which!r}") from None


def bell_evolve(which, gamma_plus):
    """``(e^{i gamma_+}|ud> +/- e^{-i gamma_+}|du>) / sqrt(2)``."""
    sign = {"plus": 1.0, "psi+": 1.0, "minus": -1.0, "psi-": -1.0}.get(which)
    if sign is None:
        raise ValueError(f"which must be 'plus' or 'minus', got {which!r}")
    return (np.exp(1j * gamma_plus) * _UD + sign * np.exp(-1j * gamma_plus) * _DU) / np.sqrt(2.0)


def bell_transition_matrix(gamma_plus):
    """``T[i, j] = <psi_j | psi_i(tau)>`` for ``i, j`` in (plus, minus)."""
    basis = [bell_state("plus"), bell_state("minus")]
    evolved = [bell_evolve("plus", gamma_plus), bell_evolve("minus", gamma_plus)]
    return np.array([[np.vdot(b, e) for b in basis] for e in evolved])


def three_spin_phase(a, pair_phases, single_phases):
    """Compose a three-spin cyclic phase from pair and single-spin phases.

    ``a1 e^{i(g_AB + g_C)} + a2 e^{i(g_A + g_BC)} + a3 e^{i(g_B + g_CA)}``

    Parameters
    ----------
    a : sequence of 3 complex
        Weights of the three pairings.
    pair_phases : (g_AB, g_BC, g_CA)
    single_phases : (g_A, g_B, g_C)

    Returns
    -------
    value : complex
    phase : float
        Principal argument of ``value``.
    """
    a1, a2, a3 = (complex(x) for x in a)
    if a1 == a2 == a3 == 0:
        raise ZeroState("all weights are zero")
    g_ab, g_bc, g_ca = pair_phases
    g_a, g_b, g_c = single_phases
    value = complex(
        a1 * np.exp(1j * (g_ab + g_c))
        + a2 * np.exp(1j * (g_a + g_bc))
        + a3 * np.exp(1j * (g_b + g_ca))
    )
    if abs(value) < VISIBILITY_FLOOR:
        raise ZeroVisibility("three-spin composition vanishes")
    return value, wrap_principal(np.angle(value))

