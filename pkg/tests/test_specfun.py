import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import laguerre_series, sinh_element
from tavis_grwa import specfun
from tavis_grwa.errors import ArgumentError
from tavis_grwa.models import SystemParams


def P(g, delta=1.0, omega=1.0):
    return SystemParams(delta=delta, g=g, omega=omega)


def test_laguerre_examples():
    assert specfun.laguerre(0, 0, 3.7) == 1.0
    assert specfun.laguerre(2, 1, 0.0) == 3.0
    # oracle: explicit finite sum gives 1 - 2 + 1/2
    assert laguerre_series(2, 0, 1.0) == -0.5
    assert specfun.laguerre(2, 0, 1.0) == pytest.approx(-0.5, abs=1e-15)


@pytest.mark.parametrize("n,k", [(5, 0), (7, 3), (10, 2)])
def test_laguerre_at_zero_is_binomial(n, k):
    assert specfun.laguerre(n, k, 0.0) == math.comb(n + k, n)


@pytest.mark.parametrize("bad", [(-1, 0, 1.0), (1, -2, 1.0), (1, 0, -0.1), (1, 0, float("nan")),
                                 (1, 0, float("inf")), (1.5, 0, 1.0)])
def test_laguerre_rejects_bad_arguments(bad):
    with pytest.raises(ArgumentError):
        specfun.laguerre(*bad)


@settings(max_examples=150, deadline=None)
@given(n=st.integers(0, 12), k=st.integers(0, 6), x=st.floats(0, 25))
def test_laguerre_matches_series(n, k, x):
    ref = laguerre_series(n, k, x)
    val = specfun.laguerre(n, k, x)
    scale = max(abs(laguerre_series(m, k, x)) for m in range(max(0, n - 1), n + 2))
    assert abs(val - ref) <= 1e-10 * max(abs(ref), scale * 1e-2, 1e-300)


@settings(max_examples=150, deadline=None)
@given(n=st.integers(1, 150), k=st.integers(0, 5), x=st.floats(0, 25))
def test_three_term_recurrence(n, k, x):
    tab = specfun.laguerre_table(n + 1, k, x)
    lhs = (n + 1) * tab[n + 1]
    rhs = (2 * n + k + 1 - x) * tab[n] - (n + k) * tab[n - 1]
    scale = max(abs((2 * n + k + 1 - x) * tab[n]), abs((n + k) * tab[n - 1]), 1e-300)
    assert abs(lhs - rhs) <= 1e-10 * scale


def test_g0_examples():
    for n in (0, 3, 17):
        assert specfun.g0(n, P(0.0)) == 1.0
    assert specfun.g0(0, P(1.0)) == pytest.approx(math.exp(-0.5), rel=1e-15)
    assert specfun.g0(0, P(0.7)) == specfun.beta(P(0.7))
    # L_1(1) = 0 exactly
    assert abs(specfun.g0(1, P(1.0))) < 1e-15


@settings(max_examples=100, deadline=None)
@given(n=st.integers(0, 60), g=st.floats(0, 3))
def test_g0_bounded_by_one(n, g):
    assert abs(specfun.g0(n, P(g))) <= 1.0 + 1e-12


def test_g0_uses_ratio_only():
    assert specfun.g0(4, SystemParams(1.0, 0.6, 2.0)) == pytest.approx(specfun.g0(4, P(0.3)), rel=1e-15)


def test_f1_examples():
    assert specfun.f1_element(0, P(0.0)) == 0.0
    assert specfun.f1_element(0, P(0.3)) == pytest.approx(0.3 * math.exp(-0.045), rel=1e-15)
    assert specfun.f1_element(0, P(0.3)) == pytest.approx(0.286799, abs=5e-7)


@pytest.mark.parametrize("g", [0.05, 0.3, 0.7, 1.0])
def test_f1_matches_matrix_exponential(g):
    vals = specfun.f1_table(20, P(g))
    for n in range(21):
        assert vals[n] == pytest.approx(sinh_element(n, g), abs=1e-9)


def test_tables_match_scalars():
    p = P(0.8)
    np.testing.assert_array_equal(specfun.g0_table(9, p)[[2, 9]], [specfun.g0(2, p), specfun.g0(9, p)])
    assert specfun.f1_table(9, p)[5] == specfun.f1_element(5, p)
