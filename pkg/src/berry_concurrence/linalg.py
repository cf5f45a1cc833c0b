"""
Dense complex linear algebra for one-, two- and three-qubit registers.

States and operators are plain ``numpy`` arrays of dtype ``complex128``:
a state vector is 1-D with a power-of-two length, an operator is a square
2-D array.  The helpers in this module validate their inputs and return new
arrays; nothing is modified in place.

Basis convention: index 0 is ``|up_z>`` (sigma_z = +1) and index 1 is
``|down_z>``.  Two-qubit registers are ordered ``|A B>`` with qubit A the
most significant, i.e. ``(uu, ud, du, dd)``.

The Hermitian eigensolver is a cyclic complex Jacobi iteration; it is meant
for the tiny matrices used here (dimension <= 8), where robustness matters
more than speed.
"""
import numpy as np

from .errors import BadDimension, NotHermitian, NotNormalized, NotPSD, ZeroState

__all__ = [
    "I2", "SX", "SY", "SZ",
    "state_vector", "is_hermitian", "is_unitary", "density_matrix",
    "kron", "hermitian_eig", "psd_sqrt", "partial_trace", "expm_hermitian",
]

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)

NORM_TOL = 1e-12
PSD_WINDOW = 1e-10          # eigenvalues in [-PSD_WINDOW, 0) count as roundoff
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


def _is_power_of_two(n):
    return n >= 1 and (n & (n - 1)) == 0


def state_vector(amplitudes, normalize=True):
    """Return ``amplitudes`` as a complex state vector.

    Parameters
    ----------
    amplitudes : array_like
        Complex amplitudes; the length must be a power of two.
    normalize : bool
        Rescale to unit norm.  When False the vector must already be
        normalized within ``1e-12``.
    """
    v = np.array(amplitudes, dtype=complex).reshape(-1)
    if not _is_power_of_two(v.size):
        raise BadDimension(f"state length {v.size} is not a power of two")
    if not np.all(np.isfinite(v)):
        raise ValueError("state amplitudes must be finite")
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise ZeroState("all amplitudes are zero")
    if normalize:
        return v / norm
    if abs(norm - 1.0) > NORM_TOL:
        raise NotNormalized(f"state norm is {norm!r}")
    return v


def _square(m):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise BadDimension(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def is_hermitian(m, tol=1e-12):
    m = _square(m)
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tol)


def is_unitary(m, tol=1e-12):
    m = _square(m)
    return bool(np.max(np.abs(m.conj().T @ m - np.eye(len(m))), initial=0.0) <= tol)


def density_matrix(x, tol=NORM_TOL):
    """Build and validate a density matrix.

    ``x`` is either a state vector (turned into ``|x><x|``) or a square
    matrix, which must be Hermitian and of unit trace within ``tol`` and have
    no eigenvalue below ``-1e-10``.
    """
    x = np.asarray(x, dtype=complex)
    if x.ndim == 1:
        v = state_vector(x, normalize=False)
        return np.outer(v, v.conj())
    rho = _square(x)
    if not _is_power_of_two(len(rho)):
        raise BadDimension(f"dimension {len(rho)} is not a power of two")
    if not is_hermitian(rho, tol):
        raise NotHermitian("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > tol:
        raise NotNormalized(f"trace is {np.trace(rho).real!r}")
    w, _ = hermitian_eig(rho)
    if w[0] < -PSD_WINDOW:
        raise NotPSD(f"smallest eigenvalue {w[0]!r}")
    return rho


def kron(a, b):
    """Kronecker product: entry ``(i*db + k, j*db + l)`` is ``a[i,j] * b[k,l]``."""
    return np.kron(_square(a), _square(b))


def _jacobi_rotate(a, v, p, q):
    apq = a[p, q]
    r = abs(apq)
    if r == 0.0:
        return
    phase = apq / r
    theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
    t = (1.0 if theta >= 0.0 else -1.0) / (abs(theta) + np.hypot(theta, 1.0))
    c = 1.0 / np.hypot(t, 1.0)
    s = t * c
    # diag(1, conj(phase)) makes the (p, q) block real, then a Givens rotation
    g = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
    idx = [p, q]
    a[:, idx] = a[:, idx] @ g
    a[idx, :] = g.conj().T @ a[idx, :]
    a[p, q] = a[q, p] = 0.0
    v[:, idx] = v[:, idx] @ g


def hermitian_eig(m):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Returns
    -------
    w : ndarray
        Eigenvalues in ascending order.
    v : ndarray
        Orthonormal eigenvectors as columns, ``m @ v[:, k] = w[k] * v[:, k]``.
        Each column is phased so its first nonzero component is real and
        positive.
    """
    m = _square(m)
    if not is_hermitian(m, 1e-10):
        raise NotHermitian("hermitian_eig needs a Hermitian matrix")
    n = len(m)
    a = 0.5 * (m + m.conj().T)
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n), v

    offdiag = ~np.eye(n, dtype=bool)

    def off_norm():
        return np.linalg.norm(a[offdiag])

    for _ in range(JACOBI_MAX_SWEEPS):
        if off_norm() <= JACOBI_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _jacobi_rotate(a, v, p, q)
    else:
        if off_norm() > JACOBI_TOL * scale:
            raise RuntimeError("Jacobi iteration did not converge")

    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    w, v = w[order], v[:, order]
    for k in range(n):
        col = v[:, k]
        lead = np.flatnonzero(np.abs(col) > 1e-12)[0]
        v[:, k] = col * (abs(col[lead]) / col[lead])
    return w, v


def psd_sqrt(rho):
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in ``[-1e-10, 0)`` are clamped to zero, and so are positive
    eigenvalues at the roundoff floor (``1e-14`` relative to the largest);
    anything below ``-1e-10`` raises :class:`NotPSD`.  The floor keeps the
    null space of a projector exactly null, so ``psd_sqrt(P) == P`` to
    machine precision instead of to ``sqrt(eps)``.
    """
    w, v = hermitian_eig(rho)
    if w[0] < -PSD_WINDOW:
        raise NotPSD(f"smallest eigenvalue {w[0]!r}")
    floor = 1e-14 * max(1.0, abs(w[-1]))
    w = np.where(w <= floor, 0.0, w)
    return (v * np.sqrt(w)) @ v.conj().T


def partial_trace(rho, keep):
    """Reduced 2x2 state of a two-qubit density matrix.

    ``keep`` selects the surviving qubit: ``"A"``/``0`` (most significant)
    or ``"B"``/``1``.
    """
    rho = _square(rho)
    if rho.shape != (4, 4):
        raise BadDimension("partial_trace expects a two-qubit (4x4) matrix")
    r = rho.reshape(2, 2, 2, 2)
    if keep in ("A", "a", 0):
        return np.einsum("ikjk->ij", r)
    if keep in ("B", "b", 1):
        return np.einsum("kikj->ij", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def expm_hermitian(h, t=1.0):
    """``exp(-i h t)`` for Hermitian ``h`` via its eigendecomposition."""
    w, v = hermitian_eig(h)
    return (v * np.exp(-1j * w * t)) @ v.conj().T
