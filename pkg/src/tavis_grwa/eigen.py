"""Dense Hermitian eigendecomposition and spectral time evolution."""

from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, ContractViolation, NumericalError

HERMITIAN_TOL = 1e-12
_TIE = 1e-9


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues with orthonormal eigenvectors as columns."""

    values: np.ndarray
    vectors: np.ndarray

    @property
    def dim(self):
        return self.values.shape[0]

    def residual(self, matrix):
        """Largest entry of ``|M v_k - lambda_k v_k|`` over all pairs."""
        r = matrix @ self.vectors - self.vectors * self.values
        return float(np.max(np.abs(r), initial=0.0))

    def orthonormality_error(self):
        v = self.vectors
        return float(np.max(np.abs(v.conj().T @ v - np.eye(v.shape[1])), initial=0.0))


def normalize_phases(vectors):
    """Rotate each column so its largest-magnitude entry is real and positive.

    The first entry within ``1e-9`` relative of the peak wins ties.
    """
    mag = np.abs(vectors)
    peak = mag.max(axis=0)
    lead = np.argmax(mag >= (1.0 - _TIE) * peak, axis=0)
    picked = vectors[lead, np.arange(vectors.shape[1])]
    if np.iscomplexobj(vectors):
        phase = np.ones_like(picked)
        nz = np.abs(picked) > 0
        phase[nz] = np.abs(picked[nz]) / picked[nz]
    else:
        phase = np.where(picked < 0, -1.0, 1.0)
    return vectors * phase


def check_hermitian(matrix, tol=HERMITIAN_TOL):
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ContractViolation(f"expected a square matrix, got shape {m.shape}")
    scale = max(1.0, float(np.max(np.abs(m), initial=0.0)))
    err = float(np.max(np.abs(m - m.conj().T), initial=0.0))
    if err > tol * scale:
        raise ContractViolation(
            f"matrix is not Hermitian: max |M - M^H| = {err:.3e} exceeds {tol:.0e}"
        )
    return m


def eigh(matrix):
    """Full eigendecomposition of a Hermitian matrix.

    Eigenvalues are ascending. Each eigenvector is phase-fixed so that its
    largest-magnitude component is real and positive.
    """
    m = check_hermitian(matrix)
    try:
        values, vectors = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(
            f"eigendecomposition of {m.shape[0]}x{m.shape[0]} matrix failed "
            f"(finite entries: {bool(np.all(np.isfinite(m)))}): {exc}"
        ) from exc
    return EigenDecomposition(values, normalize_phases(vectors))


def eigvalsh(matrix):
    """Ascending eigenvalues only."""
    m = check_hermitian(matrix)
    try:
        return np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigenvalue computation failed: {exc}") from exc


def evolve(psi0, decomp, t):
    """``exp(-i H t) psi0`` from the spectral decomposition of ``H``.

    ``t`` may be a scalar (returns a vector) or a 1-D array of times (returns
    one row per time).
    """
    psi0 = np.asarray(psi0, dtype=complex)
    if psi0.shape != (decomp.vectors.shape[0],):
        raise ArgumentError(
            f"state of length {psi0.shape} does not match decomposition of "
            f"dimension {decomp.vectors.shape[0]}"
        )
    coeffs = decomp.vectors.conj().T @ psi0
    out = evolve_coefficients(coeffs, decomp.values, decomp.vectors, t)
    # t = 0 returns the input untouched rather than its basis round trip
    out[np.asarray(t) == 0] = psi0
    return out


def evolve_coefficients(coeffs, energies, vectors, t):
    """``sum_k c_k exp(-i E_k t) v_k`` for scalar or array ``t``."""
    times = np.asarray(t, dtype=float)
    phases = np.exp(-1j * np.multiply.outer(times, energies))
    return (phases * coeffs) @ vectors.T
