"""
Spin-1/2 in a magnetic field precessing on a cone about the z axis.

The field direction is ``n(t) = (sin phi cos w0 t, sin phi sin w0 t, cos phi)``
and the Hamiltonian is ``H(t) = (w_L / 2) n(t) . sigma`` (hbar = 1).  One
field cycle lasts ``tau = 2 pi / w0``.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linalg import SX, SY, SZ

__all__ = [
    "FieldConfig", "BerryFactor", "field_direction", "hamiltonian",
    "instantaneous_eigenstates", "half_versine", "berry_factor", "flux_phase", "monopole_field",
]


def _check_tilt(phi):
    if not (np.isfinite(phi) and 0.0 <= phi <= np.pi):
        raise DomainError(f"tilt angle phi={phi!r} outside [0, pi]")


@dataclass(frozen=True)
class FieldConfig:
    """Rotating-field parameters.

    Attributes
    ----------
    phi : float
        Cone half-angle between field and quantization axis, in [0, pi].
    omega0 : float
        Angular velocity of the field about z.
    omega_larmor : float
        Larmor frequency; the Hamiltonian eigenvalues are +/- omega_larmor/2.
    """

    phi: float
    omega0: float = 1.0
    omega_larmor: float = 1.0

    def __post_init__(self):
        _check_tilt(self.phi)
        if not self.omega0 > 0:
            raise DomainError("omega0 must be positive")
        # zero is allowed: it switches the Hamiltonian off
        if not self.omega_larmor >= 0:
            raise DomainError("omega_larmor must be non-negative")

    @property
    def period(self):
        return 2.0 * np.pi / self.omega0


@dataclass(frozen=True)
class BerryFactor:
    b: float
    abs_b: float


def field_direction(cfg, t):
    """Unit vector of the field at time ``t``."""
    s, c = np.sin(cfg.phi), np.cos(cfg.phi)
    wt = cfg.omega0 * t
    return np.array([s * np.cos(wt), s * np.sin(wt), c])


def hamiltonian(cfg, t):
    nx, ny, nz = field_direction(cfg, t)
    return 0.5 * cfg.omega_larmor * (nx * SX + ny * SY + nz * SZ)


def instantaneous_eigenstates(cfg, t):
    """Eigenvectors of ``n(t) . sigma`` for eigenvalues +1 and -1.

    ``up = cos(phi/2)|u> + sin(phi/2) e^{i w0 t}|d>`` and
    ``down = -sin(phi/2)|u> + cos(phi/2) e^{i w0 t}|d>``.  The minus sign
    on ``down`` is what makes the pair orthogonal.
    """
    c, s = np.cos(cfg.phi / 2), np.sin(cfg.phi / 2)
    e = np.exp(1j * cfg.omega0 * t)
    up = np.array([c, s * e], dtype=complex)
    down = np.array([-s, c * e], dtype=complex)
    return up, down


def half_versine(phi):
    """``(1 - cos phi) / 2`` evaluated as ``4 cos^2(phi/4) sin^2(phi/4)``.

    The product form has no cancellation near ``phi = 0`` and is exact at
    ``phi`` = 0, pi/2 and pi.
    """
    return 4.0 * np.cos(phi / 4) ** 2 * np.sin(phi / 4) ** 2


def berry_factor(phi):
    """Flux factor ``b = -(1 - cos phi) / 2`` for cone angle ``phi``."""
    _check_tilt(phi)
    abs_b = float(half_versine(phi))
    return BerryFactor(b=-abs_b + 0.0, abs_b=abs_b)


def flux_phase(b):
    """Cyclic phase factor ``exp(2 pi i b)``."""
    if not np.isfinite(b):
        raise DomainError("b must be finite")
    return complex(np.exp(2j * np.pi * b))


def monopole_field(b, radius):
    """Monopole field ``b / (2 pi R^2)`` on a sphere of radius ``R``, in flux quanta per area."""
    if not radius > 0:
        raise DomainError("radius must be positive")
    return b / (2.0 * np.pi * radius ** 2)
