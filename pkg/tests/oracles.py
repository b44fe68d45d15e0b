"""Independent reference computations used by the test-suite.

None of these call into the code paths they check.
"""

import math
from fractions import Fraction

import numpy as np
import scipy.linalg


def laguerre_series(n, k, x):
    """``L_n^k(x)`` from the explicit finite sum, in exact rational arithmetic.

    ``L_n^{m-n}(x) = sum_i (-1)^{n-i} m! x^{n-i} / ((m-i)! (n-i)! i!)`` with
    ``m = n + k``; ``x`` is converted exactly from its float value.
    """
    m = n + k
    xf = Fraction(x)
    total = Fraction(0)
    for i in range(min(m, n) + 1):
        term = Fraction(math.factorial(m), math.factorial(m - i) * math.factorial(n - i) * math.factorial(i))
        total += (-1) ** (n - i) * term * xf ** (n - i)
    return float(total)


def ladder(N):
    a = np.zeros((N + 1, N + 1))
    for n in range(1, N + 1):
        a[n - 1, n] = math.sqrt(n)
    return a


def displacement_expm(lam, N):
    """``exp[lam (a^+ - a)]`` straight from scipy's expm on a freshly built generator."""
    a = ladder(N)
    return scipy.linalg.expm(lam * (a.T - a))


def sinh_element(n, lam, N=80):
    """``<n+1|sinh[lam (a^+ - a)]|n>`` from matrix exponentials."""
    s = 0.5 * (displacement_expm(lam, N) - displacement_expm(-lam, N))
    return s[n + 1, n]


def spin1():
    """Spin-1 matrices in the (+1, 0, -1) ordering, built from the standard ladder formula."""
    jp = np.zeros((3, 3))
    ms = [1, 0, -1]
    for col, m in enumerate(ms):
        if m < 1:
            jp[col - 1, col] = math.sqrt(1 * 2 - m * (m + 1))
    jx = (jp + jp.T) / 2
    jy = (jp - jp.T) / 2j
    jz = np.diag(ms).astype(float)
    return jx, jy, jz, jp


def full_hamiltonian(delta, g, omega, N):
    jx, _, jz, _ = spin1()
    a = ladder(N)
    n = a.T @ a
    return delta * np.kron(jx, np.eye(N + 1)) + omega * np.kron(np.eye(3), n) + g * np.kron(jz, a + a.T)


def exact_levels(delta, g, omega=1.0, N=60, levels=8):
    return np.linalg.eigvalsh(full_hamiltonian(delta, g, omega, N))[:levels]


def decoupled_levels(delta, omega, levels, nmax=40):
    """``omega n + m delta``, ``m in {-1, 0, 1}``: the g = 0 spectrum."""
    vals = sorted(omega * n + m * delta for n in range(nmax) for m in (-1, 0, 1))
    return np.array(vals[:levels])


def displaced_levels(g, omega, levels, nmax=40):
    """``omega n - g^2 j^2 / omega``: the delta = 0 spectrum."""
    vals = sorted(omega * n - g * g * j * j / omega for n in range(nmax) for j in (1, 0, -1))
    return np.array(vals[:levels])


def cos4(delta, t):
    """``|<-1| exp(-i delta Jx t) |-1>|^2`` for spin 1."""
    return np.cos(0.5 * delta * np.asarray(t)) ** 4
