"""Zeroth-order (adiabatic) approximation.

After the polaron transform only the photon-diagonal part ``delta Jx G0(n)``
of the qubit term is kept, so every Fock index ``n`` gives an independent
3x3 problem on ``(|+1,n>, |0,n>, |-1,n>)``.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import hilbert, specfun
from .models import SpectrumResult, _check_levels
from .errors import ArgumentError

SINGULAR_G0 = 1e-10
BRANCHES = ("+", "0", "-")


@dataclass(frozen=True)
class ZerothLevel:
    n: int
    branch: str
    energy: float
    spin_weights: np.ndarray  # on (|+1>, |0>, |-1>), unnormalized


def _check_n(n):
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise ArgumentError(f"photon index must be a non-negative integer, got {n!r}")
    return int(n)


def zeroth_matrix(n, params, g0n=None):
    """The 3x3 zeroth-order matrix for photon index ``n``."""
    n = _check_n(n)
    if g0n is None:
        g0n = specfun.g0(n, params)
    w = params.omega
    shift = params.g ** 2 / w
    c = params.delta * g0n / math.sqrt(2.0)
    return np.array([
        [w * n - shift, c, 0.0],
        [c, w * n, c],
        [0.0, c, w * n - shift],
    ])


def _energies(n, params, g0n):
    w = params.omega
    x = params.ratio ** 2
    root = math.sqrt(x * x + 4.0 * (params.delta * g0n / w) ** 2)
    return (
        0.5 * w * (2 * n - x + root),
        w * n - params.g ** 2 / w,
        0.5 * w * (2 * n - x - root),
    )


def zeroth_energies(n, params):
    """``(eps_plus, eps_zero, eps_minus)`` for photon index ``n``.

    The square-root form depends on ``G0(n)`` only through its square, so it
    stays regular at Laguerre zeros.
    """
    n = _check_n(n)
    return _energies(n, params, specfun.g0(n, params))


def _pm_weights(n, params, g0n):
    """Spin vectors of the + and - branches, each on ``(|+1>, |0>, |-1>)``.

    Closed form ``(1, mu, 1)`` with ``mu`` a root of ``(chi +- sqrt(8 + chi^2))/2``;
    the smaller-magnitude root comes from ``mu_plus mu_minus = -2``. Falls back to
    the symmetric-sector 2x2 eigenproblem when ``chi`` is undefined.
    """
    if params.delta == 0.0 or abs(g0n) < SINGULAR_G0:
        w = params.omega
        # symmetric sector basis: (|+1> + |-1>)/sqrt2, |0>
        c = params.delta * g0n
        m = np.array([[w * n - params.g ** 2 / w, c], [c, w * n]])
        _, vecs = np.linalg.eigh(m)
        out = []
        for k in (1, 0):  # + branch is the upper root
            s, mid = vecs[:, k]
            v = np.array([s / math.sqrt(2.0), mid, s / math.sqrt(2.0)])
            out.append(v if v[np.argmax(np.abs(v))] > 0 else -v)
        return out[0], out[1]
    chi = math.sqrt(2.0) * params.g ** 2 / (params.omega * params.delta * g0n)
    root = math.sqrt(8.0 + chi * chi)
    # eps_plus = w n - g^2/w + (delta G0/sqrt2) mu, so the upper level takes the
    # root whose sign matches G0: the larger-magnitude one
    mu_p = 0.5 * (chi + math.copysign(root, chi))
    mu_m = -2.0 / mu_p
    return np.array([1.0, mu_p, 1.0]), np.array([1.0, mu_m, 1.0])


def zeroth_levels(n, params):
    """The three :class:`ZerothLevel` records for photon index ``n``."""
    n = _check_n(n)
    g0n = specfun.g0(n, params)
    ep, e0, em = _energies(n, params, g0n)
    wp, wm = _pm_weights(n, params, g0n)
    return [
        ZerothLevel(n, "+", ep, wp),
        ZerothLevel(n, "0", e0, np.array([1.0, 0.0, -1.0])),
        ZerothLevel(n, "-", em, wm),
    ]


def _spin_table(params, N):
    """Normalized spin vectors, shape ``(N+1, 3 spins, 3 branches)``, and energies ``(N+1, 3)``."""
    g0s = specfun.g0_table(N, params)
    spins = np.empty((N + 1, 3, 3))
    energies = np.empty((N + 1, 3))
    zero = np.array([1.0, 0.0, -1.0]) / math.sqrt(2.0)
    for n in range(N + 1):
        energies[n] = _energies(n, params, g0s[n])
        wp, wm = _pm_weights(n, params, g0s[n])
        spins[n, :, 0] = wp / np.linalg.norm(wp)
        spins[n, :, 1] = zero
        spins[n, :, 2] = wm / np.linalg.norm(wm)
    return spins, energies


def _to_original_frame(spin_amps, n_index, params, N):
    """Columns ``sum_j spin_amps[j] |j> (x) D(-j g/w)|n>`` for each column.

    ``spin_amps`` has shape ``(3, K)``, ``n_index`` shape ``(K,)``.
    """
    d = N + 1
    lam = params.ratio
    disp = {j: hilbert.displacement(-j * lam, N) for j in hilbert.SPIN_VALUES}
    out = np.zeros((3 * d, spin_amps.shape[1]))
    for j in hilbert.SPIN_VALUES:
        s = hilbert.SPIN_INDEX[j]
        out[s * d:(s + 1) * d] = disp[j][:, n_index] * spin_amps[s]
    return out


def zeroth_states(n, params, N):
    """Branch ``(+, 0, -)`` eigenstates for photon index ``n``, in the original frame.

    Each is ``U^+`` applied to (normalized spin vector) ``(x) |n>``; requires
    ``n <= N/2`` so the displaced number states stay inside the truncation.
    """
    n = _check_n(n)
    if n > N / 2:
        raise ArgumentError(f"photon index {n} too close to truncation N={N} (need n <= N/2)")
    spins, _ = _spin_table(params, n)
    cols = _to_original_frame(spins[n], np.full(3, n), params, N)
    return [cols[:, k].astype(complex) for k in range(3)]


def zeroth_basis(params, N):
    """All ``3(N+1)`` zeroth-order energies and original-frame eigenvectors, ascending."""
    spins, energies = _spin_table(params, N)
    amps = spins.transpose(1, 0, 2).reshape(3, -1)  # column order (n, branch)
    n_index = np.repeat(np.arange(N + 1), 3)
    vecs = _to_original_frame(amps, n_index, params, N)
    e = energies.ravel()
    order = np.argsort(e, kind="stable")
    return e[order], vecs[:, order]


def zeroth_spectrum(params, N=60, levels=8):
    """Lowest ``levels`` of the pooled ``eps_{+,n}, eps_{0,n}, eps_{-,n}``, ``n = 0..N``."""
    levels = _check_levels(levels, N)
    energies = np.empty((N + 1, 3))
    g0s = specfun.g0_table(N, params)
    for n in range(N + 1):
        energies[n] = _energies(n, params, g0s[n])
    return SpectrumResult("zeroth", params, N, np.sort(energies.ravel())[:levels])
