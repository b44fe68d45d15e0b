"""Spin-population dynamics from a displaced coherent initial state.

Every method is reduced to an eigenbasis in the original frame (energies plus
orthonormal columns). The initial state is expanded in that basis and
propagated spectrally, and the spin-sector populations are read off.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import adiabatic, eigen, grwa, hilbert, models
from .errors import ArgumentError, NumericalError

METHODS = ("exact", "grwa", "rwa", "zeroth")
DEFAULT_N_DYNAMICS = 80
DEFAULT_ALPHA = 2.0
DEFAULT_T_MAX = 50.0
DEFAULT_DT = 0.05
COMPLETENESS_TOL = 1e-6


@dataclass(frozen=True)
class DynamicsConfig:
    params: models.SystemParams
    alpha: float = DEFAULT_ALPHA
    t_max: float = DEFAULT_T_MAX
    dt: float = DEFAULT_DT
    method: str = "grwa"
    N: int = DEFAULT_N_DYNAMICS

    def __post_init__(self):
        if self.method not in METHODS:
            raise ArgumentError(f"unknown method {self.method!r}; choose from {METHODS}")
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise ArgumentError(f"dt must be > 0, got {self.dt}")
        if not (self.t_max >= 0 and math.isfinite(self.t_max)):
            raise ArgumentError(f"t_max must be >= 0, got {self.t_max}")
        if isinstance(self.N, bool) or int(self.N) != self.N or self.N < 1:
            raise ArgumentError(f"N must be an integer >= 1, got {self.N!r}")
        if self.alpha ** 2 > self.N / 4:
            raise ArgumentError(f"alpha={self.alpha} needs N >= {4 * self.alpha ** 2:g}")


@dataclass(frozen=True)
class TimeSeries:
    """Populations ``(P_+1, P_0, P_-1)`` per sampled time."""

    method: str
    times: np.ndarray
    populations: np.ndarray = field(repr=False)

    @property
    def p_minus1(self):
        return self.populations[:, 2]

    @property
    def p_minus1_squared(self):
        return self.populations[:, 2] ** 2


def time_grid(t_max, dt):
    """Uniform grid ``0, dt, ..., k*dt`` with ``k = round(t_max/dt)``."""
    steps = int(round(t_max / dt))
    return np.arange(steps + 1) * dt


def initial_state(config):
    """``|-1> (x) exp[(g/w)(a^+ - a)] |alpha>``."""
    N = config.N
    fock = hilbert.displacement(config.params.ratio, N) @ hilbert.coherent_state(config.alpha, N)
    psi = np.zeros(hilbert.full_dim(N), dtype=complex)
    s = hilbert.SPIN_INDEX[-1] * (N + 1)
    psi[s:s + N + 1] = fock
    return psi / np.linalg.norm(psi)


def spin_populations(psi):
    """``(P_+1, P_0, P_-1)``: diagonal of the photon-traced spin density matrix.

    Accepts a single state or a stack of states (last axis is the full space).
    """
    return np.sum(np.abs(hilbert.sectors(psi)) ** 2, axis=-1)


def method_basis(method, params, N):
    """``(energies, vectors)`` of a method's eigenbasis, columns in the original frame."""
    if method == "exact":
        dec = eigen.eigh(models.build_full_hamiltonian(params, N))
        return dec.values, dec.vectors
    if method == "rwa":
        dec = eigen.eigh(models.rwa_hamiltonian(params, N))
        back = np.kron(models.frame_rotation().T, np.eye(N + 1))
        return dec.values, back @ dec.vectors
    if method == "zeroth":
        return adiabatic.zeroth_basis(params, N)
    if method == "grwa":
        if params.delta == 0.0:
            # without qubit splitting every method reduces to the exact displaced solution
            return method_basis("zeroth", params, N)
        return grwa.grwa_basis(params, N)
    raise ArgumentError(f"unknown method {method!r}; choose from {METHODS}")


def population_series(config, times=None):
    """Spin populations over ``times`` (default: the config's uniform grid)."""
    if times is None:
        times = time_grid(config.t_max, config.dt)
    psi0 = initial_state(config)
    energies, vectors = method_basis(config.method, config.params, config.N)
    coeffs = vectors.conj().T @ psi0
    weight = float(np.sum(np.abs(coeffs) ** 2))
    if weight < 1.0 - COMPLETENESS_TOL:
        raise NumericalError(
            f"{config.method} eigenbasis captures only {weight:.8f} of the initial "
            f"state at N={config.N}; increase the truncation"
        )
    psi_t = eigen.evolve_coefficients(coeffs, energies, vectors, times)
    return TimeSeries(config.method, np.asarray(times, dtype=float), spin_populations(psi_t))
