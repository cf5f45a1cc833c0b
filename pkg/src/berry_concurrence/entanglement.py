"""
Concurrence of two-spin states.

The pair states here are ``(alpha |dd> + beta |uu>) / sqrt(M)`` with
``M = |alpha|^2 + |beta|^2``.  Choosing ``|alpha| = sqrt(2) cos^2(phi/4)`` and
``|beta| = sqrt(2) sin^2(phi/4)`` makes ``2 |alpha| |beta| = sin^2(phi/2)``,
which is ``|b|`` for cone angle ``phi``.  That product is taken on the raw
coefficients; for those coefficients ``M = 2 - sin^2(phi/2)``, so the
concurrence of the *normalized* state is ``sin^2(phi/2) / M`` and agrees with
``|b|`` only at ``phi = 0`` and ``phi = pi``.  :class:`ConcurrenceReport`
carries both numbers.

:func:`wootters_concurrence` is the general two-qubit construction and is
used as an independent check on the closed forms.
"""
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import BadDimension, DomainError, NotNormalized, ZeroState
from .linalg import SY, density_matrix, hermitian_eig, kron, psd_sqrt
from .spin import _check_tilt, berry_factor, half_versine

__all__ = [
    "EntangledPair", "ConcurrenceReport", "MonogamyReport", "CatalogEntry",
    "standard_basis_state", "complex_concurrence", "coefficients_from_phi",
    "concurrence_from_phi", "wootters_concurrence", "general_concurrence",
    "monogamy_report", "spin_model_catalog",
]

_YY = kron(SY, SY)


@dataclass(frozen=True)
class EntangledPair:
    """Unnormalized amplitudes of ``|dd>`` (alpha) and ``|uu>`` (beta)."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        if self.M == 0.0:
            raise ZeroState("alpha and beta are both zero")

    @property
    def M(self):
        return abs(self.alpha) ** 2 + abs(self.beta) ** 2

    @property
    def state(self):
        """Normalized state in the register basis ``(uu, ud, du, dd)``."""
        return np.array([self.beta, 0, 0, self.alpha], dtype=complex) / np.sqrt(self.M)


@dataclass(frozen=True)
class ConcurrenceReport:
    """Concurrence values side by side.

    complex_c is ``2 alpha beta`` on the raw coefficients, paper_c is
    ``sin^2(phi/2)``, wootters_c is the concurrence of the normalized state
    and abs_b is ``|b|``.
    """

    complex_c: complex
    paper_c: float
    wootters_c: float
    abs_b: float
    phi: Optional[float] = None


@dataclass(frozen=True)
class MonogamyReport:
    n: int
    c12: float
    c1_rest: Optional[float]
    bound: float
    lhs: float
    critical_c12: float
    satisfied: bool


class CatalogEntry(NamedTuple):
    phi: float
    abs_b: float
    c: float
    label: str


def standard_basis_state(a1, a2, a3, a4):
    """State ``a1|dd> + a2|du> + a3|ud> + a4|uu>`` as a register vector (unnormalized)."""
    return np.array([a4, a3, a2, a1], dtype=complex)


def complex_concurrence(pair):
    return complex(2.0 * pair.alpha * pair.beta)


def coefficients_from_phi(phi):
    _check_tilt(phi)
    r2 = np.sqrt(2.0)
    return EntangledPair(alpha=r2 * np.cos(phi / 4) ** 2 + 0j, beta=r2 * np.sin(phi / 4) ** 2 + 0j)


def concurrence_from_phi(phi):
    _check_tilt(phi)
    pair = coefficients_from_phi(phi)
    return ConcurrenceReport(
        complex_c=complex_concurrence(pair),
        paper_c=float(half_versine(phi)),
        wootters_c=wootters_concurrence(pair.state),
        abs_b=berry_factor(phi).abs_b,
        phi=phi,
    )


def wootters_concurrence(state):
    """Wootters concurrence of a two-qubit pure state or density matrix.

    ``C = max(0, l1 - l2 - l3 - l4)`` where the ``l_i`` are the singular
    values of ``sqrt(rho) sqrt(rho~)``, ``rho~ = (Y x Y) rho* (Y x Y)``,
    i.e. the square roots of the eigenvalues of
    ``sqrt(rho) rho~ sqrt(rho)``.  They are read off as the positive
    eigenvalues of the Hermitian dilation ``[[0, A], [A^+, 0]]``, which
    avoids taking square roots of eigenvalues near zero.

    Raises
    ------
    BadDimension
        Input is not a two-qubit state.
    NotNormalized
        A state vector whose norm differs from 1 by more than 1e-12.
    """
    x = np.asarray(state, dtype=complex)
    if x.shape not in ((4,), (4, 4)):
        raise BadDimension(f"expected a two-qubit state, got shape {x.shape}")
    if x.ndim == 1 and abs(np.linalg.norm(x) - 1.0) > 1e-12:
        raise NotNormalized("state vector must be normalized")
    rho = density_matrix(x)
    root = psd_sqrt(rho)
    # sqrt commutes with conjugation and with the unitary Y x Y
    root_tilde = _YY @ root.conj() @ _YY
    a = root @ root_tilde
    dilation = np.zeros((8, 8), dtype=complex)
    dilation[:4, 4:] = a
    dilation[4:, :4] = a.conj().T
    w, _ = hermitian_eig(dilation)
    lam = np.clip(w[4:][::-1], 0.0, None)
    c = lam[0] - lam[1] - lam[2] - lam[3]
    return float(min(max(c, 0.0), 1.0))


def general_concurrence(state):
    """Pure-state concurrence ``2 |a_uu a_dd - a_ud a_du| / sum |a|^2``."""
    a = np.asarray(state, dtype=complex).reshape(-1)
    if a.size != 4:
        raise BadDimension("expected four amplitudes")
    norm2 = float(np.sum(np.abs(a) ** 2))
    if norm2 == 0.0:
        raise ZeroState("all amplitudes are zero")
    return 2.0 * abs(a[0] * a[3] - a[1] * a[2]) / norm2


def monogamy_report(c12, n, c1_rest=None):
    """Compare a pair concurrence with the chain bound ``(n-1) C12 <= C1(rest) <= 1``.

    Nothing is asserted: states violating the bound (the W state, for
    instance) simply come back with ``satisfied=False``.
    """
    if int(n) != n or n < 2:
        raise DomainError("n must be an integer >= 2")
    n = int(n)
    if not 0.0 <= c12 <= 1.0:
        raise DomainError("c12 must lie in [0, 1]")
    if c1_rest is not None and not 0.0 <= c1_rest <= 1.0:
        raise DomainError("c1_rest must lie in [0, 1]")
    bound = 1.0 / (n - 1)
    lhs = (n - 1) * c12
    ok = c12 <= bound + 1e-12
    if c1_rest is not None:
        ok = ok and lhs <= c1_rest + 1e-12
    if c1_rest is not None:
        c1_rest = float(c1_rest)
    return MonogamyReport(n=n, c12=float(c12), c1_rest=c1_rest, bound=bound,
                          lhs=lhs, critical_c12=bound, satisfied=bool(ok))


def spin_model_catalog():
    """Cone angles singled out for known spin models, with ``|b|`` and C."""
    entries = []
    for phi, label in ((0.0, "isotropic-ferromagnet"),
                       (np.pi / 2, "RVB-frustrated-antiferromagnet"),
                       (np.pi, "singlet-maximal")):
        rep = concurrence_from_phi(phi)
        entries.append(CatalogEntry(phi, rep.abs_b, rep.paper_c, label))
    return entries
