"""Generalized Laguerre polynomials and displaced-oscillator matrix elements.

All functions take the coupling through the ratio ``g/omega``; the argument
of every Laguerre polynomial below is ``x = (g/omega)**2``.
"""

import math

import numpy as np

from . import _kernels
from .errors import ArgumentError


def _check_index(name, value):
    if isinstance(value, bool) or int(value) != value or value < 0:
        raise ArgumentError(f"{name} must be a non-negative integer, got {value!r}")
    return int(value)


def _check_x(x):
    x = float(x)
    if not math.isfinite(x) or x < 0:
        raise ArgumentError(f"Laguerre argument must be finite and >= 0, got {x!r}")
    return x


def laguerre(n, k, x):
    """Generalized Laguerre polynomial ``L_n^k(x)``.

    Evaluated with the three-term recurrence in ``n``

        (m+1) L_{m+1} = (2m+k+1-x) L_m - (m+k) L_{m-1}

    starting from ``L_0 = 1`` and ``L_1 = 1 + k - x``.
    """
    n = _check_index("n", n)
    k = _check_index("k", k)
    x = _check_x(x)
    return float(_kernels.laguerre_table(n, k, x)[n])


def laguerre_table(nmax, k, x):
    """Return ``[L_0^k(x), ..., L_nmax^k(x)]`` as a float array."""
    nmax = _check_index("nmax", nmax)
    k = _check_index("k", k)
    x = _check_x(x)
    return _kernels.laguerre_table(nmax, k, x)


def _ratio(params):
    return params.g / params.omega


def beta(params):
    """``exp(-g^2 / 2 omega^2)``, the vacuum value of :func:`g0`."""
    return math.exp(-0.5 * _ratio(params) ** 2)


def g0(n, params):
    """Diagonal element ``<n|cosh[(g/w)(a^+ - a)]|n> = e^{-x/2} L_n(x)``."""
    n = _check_index("n", n)
    return g0_table(n, params)[n]


def g0_table(nmax, params):
    """:func:`g0` for ``n = 0..nmax`` in one recurrence sweep."""
    x = _ratio(params) ** 2
    return math.exp(-0.5 * x) * laguerre_table(nmax, 0, x)


def f1_element(n, params):
    """One-photon element ``<n+1|sinh[(g/w)(a^+ - a)]|n>``.

    Equal to ``(g/w) e^{-x/2} L_n^1(x) / sqrt(n+1)``.
    """
    n = _check_index("n", n)
    return f1_table(n, params)[n]


def f1_table(nmax, params):
    """:func:`f1_element` for ``n = 0..nmax``."""
    r = _ratio(params)
    x = r * r
    ns = np.arange(nmax + 1, dtype=float)
    return r * math.exp(-0.5 * x) * laguerre_table(nmax, 1, x) / np.sqrt(ns + 1.0)
