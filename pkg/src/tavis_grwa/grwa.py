"""First-order generalized rotating-wave approximation.

After the polaron transform the photon-free spin Hamiltonian
``delta*beta*Jx - (g^2/omega) Jz^2`` is diagonalized by the dressed basis
``S``; the one-photon part of ``i Jy delta sinh[(g/w)(a^+ - a)]`` is then
kept only where it conserves ``a^+a + (dressed index)``. The result has the
block structure of the ordinary RWA with renormalized energies and couplings.

Dressed labels use ``+1`` for the ``eps_plus`` state, ``0`` for ``eps_zero``
and ``-1`` for ``eps_minus``.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, hilbert, specfun
from .errors import ArgumentError
from .models import HamiltonianBlock, SpectrumResult, _check_levels

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class DressedSpinBasis:
    """Eigen-system of the photon-free spin Hamiltonian.

    ``S`` follows the conventional display: rows are the bare spin states
    ``(|-1>, |0>, |+1>)`` and columns the dressed states ``(-, 0, +)``.
    """

    beta: float
    chi0: float
    mu_plus: float
    mu_minus: float
    lambda_plus: float
    lambda_minus: float
    eps_plus: float
    eps_minus: float
    eps_zero: float
    S: np.ndarray

    def spin_matrix(self):
        """``S`` re-indexed to the package ordering: rows ``(+1, 0, -1)`` bare, columns ``(+, 0, -)`` dressed."""
        return self.S[::-1, ::-1].copy()


def dressed_spin(params):
    """Build the :class:`DressedSpinBasis` for ``params`` (requires ``delta > 0``)."""
    if params.delta <= 0.0:
        raise ArgumentError(
            "GRWA needs delta > 0 (chi0 diverges at delta = 0); at delta = 0 the "
            "model is solved exactly by omega*n - g^2 j^2/omega, use exact_spectrum"
        )
    beta = specfun.beta(params)
    chi0 = SQRT2 * params.g ** 2 / (params.omega * params.delta * beta)
    mu_plus = 0.5 * (chi0 + math.sqrt(chi0 * chi0 + 8.0))
    mu_minus = -2.0 / mu_plus
    lam_p = math.sqrt(2.0 + mu_plus ** 2)
    lam_m = math.sqrt(2.0 + mu_minus ** 2)
    # eps = sqrt2*delta*beta/mu avoids cancellation in -chi0 + sqrt(chi0^2 + 8)
    eps_plus = SQRT2 * params.delta * beta / mu_plus
    eps_minus = SQRT2 * params.delta * beta / mu_minus
    s = np.array([
        [1.0 / lam_m, 1.0 / SQRT2, 1.0 / lam_p],
        [mu_minus / lam_m, 0.0, mu_plus / lam_p],
        [1.0 / lam_m, -1.0 / SQRT2, 1.0 / lam_p],
    ])
    return DressedSpinBasis(
        beta=beta, chi0=chi0, mu_plus=mu_plus, mu_minus=mu_minus,
        lambda_plus=lam_p, lambda_minus=lam_m,
        eps_plus=eps_plus, eps_minus=eps_minus, eps_zero=-params.g ** 2 / params.omega,
        S=s,
    )


def _xi(sign, g0m, params, ds):
    """Renormalized dressed energy ``xi_{+-,m}`` given ``g0m = G0(m)``."""
    if sign > 0:
        mu, lam, eps = ds.mu_plus, ds.lambda_plus, ds.eps_plus
    else:
        mu, lam, eps = ds.mu_minus, ds.lambda_minus, ds.eps_minus
    return eps + 2.0 * SQRT2 * mu * params.delta * (g0m - ds.beta) / lam ** 2


def xi(sign, m, params, ds=None):
    """``xi_{+,m}`` (``sign=+1``) or ``xi_{-,m}`` (``sign=-1``)."""
    ds = ds or dressed_spin(params)
    return _xi(sign, specfun.g0(m, params), params, ds)


def grwa_coupling(n, params):
    """``kappa_n = delta <n|sinh[(g/w)(a^+ - a)]|n-1>``, the one-photon coupling into ``n``.

    Equals ``delta (g/w) e^{-x/2} L^1_{n-1}(x) / sqrt(n)``.
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ArgumentError(f"coupling index must be an integer >= 1, got {n!r}")
    return params.delta * specfun.f1_element(int(n) - 1, params)


def _block_parts(n, params, ds, g0s, f1s):
    """Diagonal and the two couplings of block ``n`` from precomputed tables."""
    w = params.omega
    diag = (
        w * (n + 1) + _xi(-1, g0s[n + 1], params, ds),
        w * n + ds.eps_zero,
        w * (n - 1) + _xi(+1, g0s[n - 1], params, ds),
    )
    kap_up = params.delta * f1s[n]       # kappa_{n+1}
    kap_dn = params.delta * f1s[n - 1]   # kappa_n
    c_minus = ds.mu_minus / ds.lambda_minus * kap_up
    c_plus = -ds.mu_plus / ds.lambda_plus * kap_dn
    return diag, c_minus, c_plus


def _block_matrix(diag, c_minus, c_plus):
    return np.array([
        [diag[0], c_minus, 0.0],
        [c_minus, diag[1], c_plus],
        [0.0, c_plus, diag[2]],
    ])


def grwa_block(n, params, ds=None):
    """GRWA matrix for ``n >= 1`` on dressed labels ``(|-1,n+1>, |0,n>, |+1,n-1>)``.

    Off-diagonals are ``(mu_-/lambda_-) kappa_{n+1}`` and
    ``-(mu_+/lambda_+) kappa_n``: the signs of ``S^T (iJy) S`` times the
    one-photon sinh elements.
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ArgumentError(f"GRWA block index must be an integer >= 1, got {n!r}")
    n = int(n)
    ds = ds or dressed_spin(params)
    g0s = specfun.g0_table(n + 1, params)
    f1s = specfun.f1_table(n, params)
    m = _block_matrix(*_block_parts(n, params, ds, g0s, f1s))
    return HamiltonianBlock(((-1, n + 1), (0, n), (1, n - 1)), m)


def grwa_block0(params, ds=None):
    """The ``n = 0`` pair on dressed labels ``(|-1,1>, |0,0>)``."""
    ds = ds or dressed_spin(params)
    c = ds.mu_minus / ds.lambda_minus * grwa_coupling(1, params)
    m = np.array([
        [params.omega + xi(-1, 1, params, ds), c],
        [c, ds.eps_zero],
    ])
    return HamiltonianBlock(((-1, 1), (0, 0)), m)


def first_excited(params, ds=None):
    """Closed-form eigenvalues ``(E_{1,-}, E_{1,+})`` of :func:`grwa_block0`."""
    ds = ds or dressed_spin(params)
    top = params.omega + xi(-1, 1, params, ds)
    c = ds.mu_minus / ds.lambda_minus * grwa_coupling(1, params)
    mean = 0.5 * (ds.eps_zero + top)
    half = 0.5 * math.sqrt((ds.eps_zero - top) ** 2 + 4.0 * c * c)
    return mean - half, mean + half


def grwa_ground(params, ds=None):
    """Energy of the uncoupled dressed state ``|-1, 0>``: ``eps_minus``."""
    ds = ds or dressed_spin(params)
    return ds.eps_minus


def _all_blocks(params, N, ds):
    g0s = specfun.g0_table(N + 1, params)
    f1s = specfun.f1_table(N, params)
    stack = np.empty((N, 3, 3))
    for n in range(1, N + 1):
        stack[n - 1] = _block_matrix(*_block_parts(n, params, ds, g0s, f1s))
    return stack


def grwa_spectrum(params, N=60, levels=8):
    """Lowest ``levels`` of the ``1 + 2 + 3N`` GRWA block eigenvalues."""
    levels = _check_levels(levels, N)
    ds = dressed_spin(params)
    b0 = grwa_block0(params, ds)
    v0, _ = _kernels.block_eigh(b0.matrix[None])
    vn, _ = _kernels.block_eigh(_all_blocks(params, N, ds))
    energies = np.sort(np.concatenate([[grwa_ground(params, ds)], v0.ravel(), vn.ravel()]))
    return SpectrumResult("grwa", params, N, energies[:levels])


def dressed_eigenbasis(params, N, ds=None):
    """Complete eigenbasis of the GRWA Hamiltonian on the truncated dressed space.

    Returns ``(energies, vectors, edge)``: vectors are columns in the dressed
    product basis (same spin-major layout, dressed ``+1, 0, -1`` in place of
    bare spins); ``edge`` flags states from blocks cut by the truncation.
    """
    ds = ds or dressed_spin(params)
    d = N + 1
    dim = 3 * d
    g0s = specfun.g0_table(N + 1, params)
    f1s = specfun.f1_table(N, params)

    def idx(label):
        return hilbert.SPIN_INDEX[label[0]] * d + label[1]

    energies, columns, edge = [], [], []

    def place(labels, vals, vecs, cut):
        for k in range(len(labels)):
            col = np.zeros(dim)
            for i, lab in enumerate(labels):
                col[idx(lab)] = vecs[i, k]
            columns.append(col)
            energies.append(vals[k])
            edge.append(cut)

    place([(-1, 0)], [grwa_ground(params, ds)], np.ones((1, 1)), False)
    b0 = grwa_block0(params, ds)
    v, V = _kernels.block_eigh(b0.matrix[None])
    place(b0.labels, v[0], V[0], False)

    full = N - 1  # blocks 1..N-1 fit entirely (label |-1, n+1> needs n+1 <= N)
    if full >= 1:
        stack = np.empty((full, 3, 3))
        for n in range(1, full + 1):
            stack[n - 1] = _block_matrix(*_block_parts(n, params, ds, g0s, f1s))
        vals, vecs = _kernels.block_eigh(stack)
        for n in range(1, full + 1):
            place([(-1, n + 1), (0, n), (1, n - 1)], vals[n - 1], vecs[n - 1], False)

    # block N loses |-1, N+1>; block N+1 keeps only |+1, N>
    diag, _, c_plus = _block_parts(N, params, ds, g0s, f1s)
    m = np.array([[diag[1], c_plus], [c_plus, diag[2]]])
    vals, vecs = _kernels.block_eigh(m[None])
    place([(0, N), (1, N - 1)], vals[0], vecs[0], True)
    top = params.omega * N + _xi(+1, g0s[N], params, ds)
    place([(1, N)], [top], np.ones((1, 1)), True)

    energies = np.array(energies)
    order = np.argsort(energies, kind="stable")
    vecs = np.array(columns).T
    return energies[order], vecs[:, order], np.array(edge)[order]


def to_original_frame(dressed_vectors, params, N, ds=None):
    """Map dressed-product columns to the original frame: spin rotation ``S`` then ``U^+``."""
    ds = ds or dressed_spin(params)
    d = N + 1
    bare = np.kron(ds.spin_matrix(), np.eye(d)) @ dressed_vectors
    u = hilbert.polaron_transform(params, N)
    return u.T @ bare


def grwa_basis(params, N):
    """All ``3(N+1)`` GRWA energies and original-frame eigenvectors, ascending."""
    ds = dressed_spin(params)
    energies, vecs, _ = dressed_eigenbasis(params, N, ds)
    return energies, to_original_frame(vecs, params, N, ds)


def grwa_eigenstates(params, N, levels):
    """The ``levels`` lowest GRWA eigenstates in the original frame (complex columns)."""
    levels = _check_levels(levels, N)
    ds = dressed_spin(params)
    energies, vecs, edge = dressed_eigenbasis(params, N, ds)
    if edge[:levels].any():
        raise ArgumentError(f"levels={levels} reaches states cut by the truncation N={N}")
    states = to_original_frame(vecs[:, :levels], params, N, ds)
    return [states[:, k].astype(complex) for k in range(levels)]
