"""Operators and states on the spin-1 x truncated-Fock space.

Basis ordering is spin-major with spin projections ``(+1, 0, -1)`` and the
Fock index ascending inside each spin sector, so the full-space index of
``|j, n>`` is ``SPIN_INDEX[j] * (N + 1) + n``.
"""

import math

import numpy as np
import scipy.linalg

from .errors import ArgumentError

SPIN_VALUES = (1, 0, -1)
SPIN_INDEX = {1: 0, 0: 1, -1: 2}
SQRT2 = math.sqrt(2.0)


def _check_trunc(N):
    if isinstance(N, bool) or int(N) != N or N < 1:
        raise ArgumentError(f"Fock truncation N must be an integer >= 1, got {N!r}")
    return int(N)


def fock_dim(N):
    return _check_trunc(N) + 1


def full_dim(N):
    return 3 * fock_dim(N)


def basis_index(j, n, N):
    """Full-space index of ``|j, n>``."""
    if j not in SPIN_INDEX:
        raise ArgumentError(f"spin projection must be one of {SPIN_VALUES}, got {j!r}")
    if not 0 <= n <= N:
        raise ArgumentError(f"Fock index {n} outside 0..{N}")
    return SPIN_INDEX[j] * (N + 1) + n


def annihilation(N):
    """Truncated ``a`` with ``<n-1|a|n> = sqrt(n)``."""
    N = _check_trunc(N)
    return np.diag(np.sqrt(np.arange(1, N + 1, dtype=float)), k=1)


def creation(N):
    return annihilation(N).T.copy()


def number(N):
    return np.diag(np.arange(_check_trunc(N) + 1, dtype=float))


def spin1_operators():
    """Spin-1 matrices ``(Jx, Jy, Jz, Jp, Jm)`` in the ``(+1, 0, -1)`` ordering.

    ``Jy`` is complex; the others are real.
    """
    jp = np.zeros((3, 3))
    jp[0, 1] = jp[1, 2] = SQRT2
    jm = jp.T.copy()
    jx = 0.5 * (jp + jm)
    jy = (jp - jm) / 2j
    jz = np.diag([1.0, 0.0, -1.0])
    return jx, jy, jz, jp, jm


def embed(spin_op, fock_op):
    """Kronecker product ``spin_op (x) fock_op`` in the spin-major ordering."""
    spin_op = np.asarray(spin_op)
    fock_op = np.asarray(fock_op)
    if spin_op.shape != (3, 3):
        raise ArgumentError(f"spin operator must be 3x3, got shape {spin_op.shape}")
    if fock_op.ndim != 2 or fock_op.shape[0] != fock_op.shape[1]:
        raise ArgumentError(f"Fock operator must be square, got shape {fock_op.shape}")
    return np.kron(spin_op, fock_op)


def is_hermitian(m, tol=1e-12):
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and bool(
        np.max(np.abs(m - m.conj().T), initial=0.0) < tol
    )


def displacement(lam, N):
    """``exp[lam (a^+ - a)]`` on the truncated Fock space.

    The generator is truncated before exponentiating, so the result is exactly
    orthogonal; its elements are accurate wherever the displaced states stay
    clear of level ``N``.
    """
    N = _check_trunc(N)
    lam = float(lam)
    if lam == 0.0:
        return np.eye(N + 1)
    a = annihilation(N)
    return scipy.linalg.expm(lam * (a.T - a))


def sinh_displacement(lam, N):
    """``sinh[lam (a^+ - a)]`` from the truncated matrix exponential."""
    return 0.5 * (displacement(lam, N) - displacement(-lam, N))


def polaron_transform(params, N):
    """``U = exp[(g/w) Jz (a^+ - a)]`` as a block-diagonal full-space matrix.

    Spin sector ``j`` carries ``displacement(j * g/w)``; the ``j = 0`` block is
    the identity.
    """
    N = _check_trunc(N)
    d = N + 1
    lam = params.g / params.omega
    u = np.zeros((3 * d, 3 * d))
    for j in SPIN_VALUES:
        s = SPIN_INDEX[j] * d
        u[s:s + d, s:s + d] = displacement(j * lam, N)
    return u


def coherent_state(alpha, N):
    """Real-amplitude coherent state ``|alpha>`` on levels ``0..N``, normalized.

    Raises ``ArgumentError`` when ``alpha**2 > N/4``: the truncation would
    carry a non-negligible share of the distribution.
    """
    N = _check_trunc(N)
    alpha = float(alpha)
    if alpha * alpha > N / 4:
        raise ArgumentError(
            f"coherent amplitude alpha={alpha} too large for truncation N={N} "
            f"(need alpha^2 <= N/4)"
        )
    ns = np.arange(N + 1)
    if alpha == 0.0:
        c = np.zeros(N + 1)
        c[0] = 1.0
        return c
    # log form avoids overflow of alpha**n / sqrt(n!) at large n
    logc = -0.5 * alpha * alpha + ns * math.log(abs(alpha)) - 0.5 * np.array(
        [math.lgamma(n + 1.0) for n in ns]
    )
    c = np.exp(logc) * np.sign(alpha) ** ns
    return c / np.linalg.norm(c)


def product_state(spin_amplitudes, fock_state):
    """``spin (x) fock`` as a complex full-space vector."""
    spin_amplitudes = np.asarray(spin_amplitudes, dtype=complex)
    fock_state = np.asarray(fock_state, dtype=complex)
    if spin_amplitudes.shape != (3,):
        raise ArgumentError("spin amplitudes must have length 3")
    return np.kron(spin_amplitudes, fock_state)


def fock_ket(n, N):
    v = np.zeros(_check_trunc(N) + 1)
    if not 0 <= n <= N:
        raise ArgumentError(f"Fock index {n} outside 0..{N}")
    v[n] = 1.0
    return v


def sectors(psi):
    """View a full-space vector as ``(3, N+1)`` spin-sector rows."""
    psi = np.asarray(psi)
    if psi.shape[-1] % 3:
        raise ArgumentError(f"state length {psi.shape[-1]} is not a multiple of 3")
    return psi.reshape(psi.shape[:-1] + (3, psi.shape[-1] // 3))
