"""Full and RWA Hamiltonians, exact and RWA spectra.

Energies are in the units of ``omega`` used to build ``SystemParams``.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, eigen, hilbert
from .errors import ArgumentError, ConvergenceError

DEFAULT_N_SPECTRUM = 60
DEFAULT_LEVELS = 8
CERTIFY_TOL = 1e-8


@dataclass(frozen=True)
class SystemParams:
    """Physical parameters: qubit splitting ``delta``, mode frequency ``omega``, coupling ``g``."""

    delta: float
    g: float
    omega: float = 1.0

    def __post_init__(self):
        for name in ("delta", "g", "omega"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ArgumentError(f"{name} must be a finite real, got {v!r}")
            object.__setattr__(self, name, float(v))
        if self.omega <= 0:
            raise ArgumentError(f"omega must be > 0, got {self.omega}")
        if self.delta < 0:
            raise ArgumentError(f"delta must be >= 0, got {self.delta}")
        if self.g < 0:
            raise ArgumentError(f"g must be >= 0, got {self.g}")

    @property
    def ratio(self):
        """``g / omega``."""
        return self.g / self.omega


@dataclass(frozen=True)
class HamiltonianBlock:
    """A small real-symmetric matrix with one label per basis state.

    Labels are ``(spin, n)`` pairs; for dressed-frame blocks ``spin`` is the
    dressed index.
    """

    labels: tuple
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        labels = tuple(tuple(lab) for lab in self.labels)
        if m.shape != (len(labels), len(labels)):
            raise ArgumentError(f"{len(labels)} labels for a matrix of shape {m.shape}")
        if len(set(labels)) != len(labels):
            raise ArgumentError(f"duplicate labels {labels}")
        if np.max(np.abs(m - m.T), initial=0.0) > 1e-14:
            raise ArgumentError("block matrix is not symmetric")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "labels", labels)

    @property
    def size(self):
        return len(self.labels)

    def eigvalsh(self):
        return np.linalg.eigvalsh(self.matrix)


@dataclass(frozen=True)
class SpectrumResult:
    """Lowest energies of one method at one parameter point."""

    method: str
    params: SystemParams
    truncation: int
    energies: np.ndarray
    vectors: np.ndarray = field(default=None, repr=False)


def _check_levels(levels, N):
    if isinstance(levels, bool) or int(levels) != levels or levels < 1:
        raise ArgumentError(f"levels must be a positive integer, got {levels!r}")
    if levels > N + 1:
        raise ArgumentError(f"levels={levels} exceeds the certified range N+1={N + 1}")
    return int(levels)


def build_full_hamiltonian(params, N):
    """``delta Jx + omega a^+a + g (a^+ + a) Jz`` on the truncated space."""
    jx, _, jz, _, _ = hilbert.spin1_operators()
    a = hilbert.annihilation(N)
    eye3 = np.eye(3)
    return (
        params.delta * hilbert.embed(jx, np.eye(N + 1))
        + params.omega * hilbert.embed(eye3, hilbert.number(N))
        + params.g * hilbert.embed(jz, a + a.T)
    )


def build_rotated_hamiltonian(params, N):
    """The same model after the spin rotation ``Jx -> -Jz``, ``Jz -> Jx``.

    ``-delta Jz + omega a^+a + (g/2)(a^+ + a)(J+ + J-)``.
    """
    jx, _, jz, _, _ = hilbert.spin1_operators()
    a = hilbert.annihilation(N)
    return (
        -params.delta * hilbert.embed(jz, np.eye(N + 1))
        + params.omega * hilbert.embed(np.eye(3), hilbert.number(N))
        + params.g * hilbert.embed(jx, a + a.T)
    )


def frame_rotation():
    """Real spin-1 rotation ``R = exp(-i pi/2 Jy)``.

    ``R Jx R^T = -Jz`` and ``R Jz R^T = Jx``, so ``R`` carries states of the
    full Hamiltonian into the frame of :func:`build_rotated_hamiltonian`.
    """
    h = 1.0 / math.sqrt(2.0)
    return np.array([[0.5, -h, 0.5], [h, 0.0, -h], [0.5, h, 0.5]])


def exact_spectrum(params, N=DEFAULT_N_SPECTRUM, levels=DEFAULT_LEVELS, *,
                   certify=True, tol=CERTIFY_TOL, vectors=False):
    """Lowest ``levels`` eigenvalues of the full Hamiltonian.

    With ``certify`` the computation is repeated at truncation ``2N`` and a
    :class:`ConvergenceError` is raised if any reported level moves by more
    than ``tol`` (in units of omega).
    """
    levels = _check_levels(levels, N)
    h = build_full_hamiltonian(params, N)
    if vectors:
        dec = eigen.eigh(h)
        energies, vecs = dec.values[:levels], dec.vectors[:, :levels]
    else:
        energies, vecs = eigen.eigvalsh(h)[:levels], None
    if certify:
        ref = eigen.eigvalsh(build_full_hamiltonian(params, 2 * N))[:levels]
        moved = np.abs(ref - energies) >= tol * params.omega
        if moved.any():
            first = int(np.argmax(moved))
            raise ConvergenceError(
                f"level {first} not converged at N={N}: changes by "
                f"{abs(ref[first] - energies[first]):.3e} at N={2 * N} "
                f"(delta={params.delta}, g={params.g}, omega={params.omega})",
                level=first,
            )
    return SpectrumResult("exact", params, N, np.array(energies), vecs)


def convergence_ladder(params, truncations, levels):
    """Lowest ``levels`` exact eigenvalues for each truncation in ``truncations``."""
    out = {}
    for N in truncations:
        lv = _check_levels(levels, N)
        out[N] = eigen.eigvalsh(build_full_hamiltonian(params, N))[:lv]
    return out


RWA_PAIRINGS = {"n-jz": -1, "n+jz": +1}


def _pairing_sign(conserved):
    try:
        return RWA_PAIRINGS[conserved]
    except KeyError:
        raise ArgumentError(f"conserved must be one of {sorted(RWA_PAIRINGS)}, got {conserved!r}") from None


def rwa_block(n, params, conserved="n-jz"):
    """RWA matrix of excitation number ``n >= 1`` in the rotated frame.

    In the rotated frame spin ``j`` has bare energy ``-j*delta``, so for
    ``delta > 0`` the resonant (energy-conserving) couplings ``a J- + a^+ J+``
    conserve ``a^+a - Jz``: basis ``(|-1, n-1>, |0, n>, |+1, n+1>)`` with
    diagonal ``(w(n-1) + delta, w n, w(n+1) - delta)``.

    ``conserved="n+jz"`` instead keeps ``a^+ J- + a J+``: basis
    ``(|+1, n-1>, |0, n>, |-1, n+1>)``, diagonal
    ``(w(n-1) - delta, w n, w(n+1) + delta)``. That pairing is off resonance by
    ``omega + delta`` and its error grows linearly in ``g`` near ``delta = omega``.
    Both share the off-diagonals ``g sqrt(n)/sqrt2`` and ``g sqrt(n+1)/sqrt2``.
    """
    s = _pairing_sign(conserved)
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ArgumentError(f"RWA block index must be an integer >= 1, got {n!r}")
    n = int(n)
    w, d = params.omega, params.delta
    c = params.g / math.sqrt(2.0)
    m = np.array([
        [w * (n - 1) - s * d, c * math.sqrt(n), 0.0],
        [c * math.sqrt(n), w * n, c * math.sqrt(n + 1)],
        [0.0, c * math.sqrt(n + 1), w * (n + 1) + s * d],
    ])
    return HamiltonianBlock(((s, n - 1), (0, n), (-s, n + 1)), m)


def rwa_low_blocks(params, conserved="n-jz"):
    """The sectors below ``n = 1``: a singleton ``|-s, 0>`` and the pair ``(|0,0>, |-s,1>)``.

    ``s = -1`` for the default resonant pairing, ``+1`` for ``conserved="n+jz"``.
    """
    s = _pairing_sign(conserved)
    w, d = params.omega, params.delta
    c = params.g / math.sqrt(2.0)
    single = HamiltonianBlock(((-s, 0),), np.array([[s * d]]))
    pair = HamiltonianBlock(((0, 0), (-s, 1)), np.array([[0.0, c], [c, w + s * d]]))
    return single, pair


def rwa_blocks(params, N, conserved="n-jz"):
    """All RWA blocks with excitation number up to ``N``: ``1 + 2 + 3N`` states."""
    return list(rwa_low_blocks(params, conserved)) + [
        rwa_block(n, params, conserved) for n in range(1, N + 1)
    ]


def _block_stack(blocks):
    return np.stack([b.matrix for b in blocks])


def rwa_spectrum(params, N=DEFAULT_N_SPECTRUM, levels=DEFAULT_LEVELS, conserved="n-jz"):
    """Lowest ``levels`` RWA energies, assembled block by block."""
    levels = _check_levels(levels, N)
    single, pair = rwa_low_blocks(params, conserved)
    vals3, _ = _kernels.block_eigh(
        _block_stack([rwa_block(n, params, conserved) for n in range(1, N + 1)])
    )
    vals2, _ = _kernels.block_eigh(pair.matrix[None])
    energies = np.sort(np.concatenate([single.matrix[0], vals2.ravel(), vals3.ravel()]))
    return SpectrumResult("rwa", params, N, energies[:levels])


def assemble(blocks, N):
    """Place block matrices into a full-space matrix, dropping labels with ``n > N``.

    Every retained label must be hit exactly once; raises otherwise.
    """
    dim = hilbert.full_dim(N)
    h = np.zeros((dim, dim))
    seen = np.zeros(dim, dtype=int)
    for b in blocks:
        keep = [i for i, (_, n) in enumerate(b.labels) if n <= N]
        idx = [hilbert.basis_index(b.labels[i][0], b.labels[i][1], N) for i in keep]
        h[np.ix_(idx, idx)] = b.matrix[np.ix_(keep, keep)]
        seen[idx] += 1
    if not np.all(seen == 1):
        bad = np.flatnonzero(seen != 1)
        raise ArgumentError(f"block assembly covers basis states {bad.tolist()} != once")
    return h


def rwa_hamiltonian(params, N, conserved="n-jz"):
    """Full truncated RWA Hamiltonian in the rotated frame.

    Blocks up to excitation ``N + 1`` are needed to reach the last state of
    the ``n - 1`` column; states beyond the truncation are dropped from the
    edge blocks.
    """
    blocks = list(rwa_low_blocks(params, conserved)) + [
        rwa_block(n, params, conserved) for n in range(1, N + 2)
    ]
    return assemble(blocks, N)
