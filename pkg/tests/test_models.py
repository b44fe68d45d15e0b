import math

import numpy as np
import pytest

from oracles import decoupled_levels, displaced_levels, exact_levels, full_hamiltonian
from tavis_grwa import hilbert, models
from tavis_grwa.errors import ArgumentError, ConvergenceError
from tavis_grwa.models import SystemParams

# frozen from a certified run (N=60 vs 120 agree below 1e-8); independent check below
EXACT_GROUND_D1_G05 = -1.0689707147730014


def test_params_validation():
    with pytest.raises(ArgumentError):
        SystemParams(delta=-1.0, g=0.1)
    with pytest.raises(ArgumentError):
        SystemParams(delta=1.0, g=-0.1)
    with pytest.raises(ArgumentError):
        SystemParams(delta=1.0, g=0.1, omega=0.0)
    with pytest.raises(ArgumentError):
        SystemParams(delta=float("nan"), g=0.1)
    assert SystemParams(1, 2, 4).ratio == 0.5


def test_full_hamiltonian_matches_independent_build():
    h = models.build_full_hamiltonian(SystemParams(0.7, 0.4, 1.3), 12)
    np.testing.assert_allclose(h, full_hamiltonian(0.7, 0.4, 1.3, 12), atol=1e-15)
    assert np.max(np.abs(h - h.T)) == 0.0


def test_decoupled_limit_eigenvalues():
    N = 10
    vals = np.linalg.eigvalsh(models.build_full_hamiltonian(SystemParams(1.0, 0.0), N))
    ref = sorted(n + m for n in range(N + 1) for m in (-1, 0, 1))
    np.testing.assert_allclose(vals, ref, atol=1e-12)


def test_delta_zero_eigenvalues():
    res = models.exact_spectrum(SystemParams(0.0, 0.8), 60, 8)
    np.testing.assert_allclose(res.energies, displaced_levels(0.8, 1.0, 8), atol=1e-8)


def test_exact_spectrum_examples():
    np.testing.assert_allclose(models.exact_spectrum(SystemParams(1.0, 0.0), 20, 3).energies,
                               [-1, 0, 0], atol=1e-12)
    assert models.exact_spectrum(SystemParams(0.0, 1.0), 60, 1).energies[0] == pytest.approx(-1.0, abs=1e-10)


def test_regression_anchor():
    e0 = models.exact_spectrum(SystemParams(1.0, 0.5), 60, 8).energies[0]
    assert e0 == pytest.approx(EXACT_GROUND_D1_G05, abs=1e-10)
    assert exact_levels(1.0, 0.5, N=120)[0] == pytest.approx(EXACT_GROUND_D1_G05, abs=1e-10)


def test_certification_failure_names_level():
    with pytest.raises(ConvergenceError) as info:
        models.exact_spectrum(SystemParams(1.0, 2.0), 8, 4)
    assert info.value.level is not None
    assert f"level {info.value.level}" in str(info.value)


def test_levels_bounds():
    with pytest.raises(ArgumentError):
        models.exact_spectrum(SystemParams(1.0, 0.1), 5, 7)
    with pytest.raises(ArgumentError):
        models.rwa_spectrum(SystemParams(1.0, 0.1), 5, 0)


def test_exact_spectrum_vectors():
    p = SystemParams(1.0, 0.5)
    res = models.exact_spectrum(p, 40, 4, vectors=True)
    h = models.build_full_hamiltonian(p, 40)
    np.testing.assert_allclose(h @ res.vectors, res.vectors * res.energies, atol=1e-9)


def test_variational_in_truncation():
    p = SystemParams(1.0, 1.0)
    ladder = models.convergence_ladder(p, [10, 15, 20, 30, 60], 6)
    rows = np.array([ladder[N] for N in (10, 15, 20, 30, 60)])
    assert np.all(np.diff(rows, axis=0) <= 1e-12)


@pytest.mark.parametrize("delta,g", [(1.0, 0.5), (0.5, 1.0), (0.3, 0.0)])
def test_frame_rotation_is_similarity(delta, g):
    p = SystemParams(delta, g)
    N = 30
    h1 = models.build_full_hamiltonian(p, N)
    h2 = models.build_rotated_hamiltonian(p, N)
    np.testing.assert_allclose(np.linalg.eigvalsh(h1), np.linalg.eigvalsh(h2), atol=1e-10)
    r = np.kron(models.frame_rotation(), np.eye(N + 1))
    np.testing.assert_allclose(r @ h1 @ r.T, h2, atol=1e-12)


def test_frame_rotation_maps_spin_operators():
    jx, _, jz, _, _ = hilbert.spin1_operators()
    r = models.frame_rotation()
    np.testing.assert_allclose(r @ jx @ r.T, -jz, atol=1e-15)
    np.testing.assert_allclose(r @ jz @ r.T, jx, atol=1e-15)
    np.testing.assert_allclose(r @ r.T, np.eye(3), atol=1e-15)


def test_rwa_block_structure():
    # resonant pairing: diagonal (w(n-1)+d, wn, w(n+1)-d)
    b = models.rwa_block(1, SystemParams(1.0, 0.2))
    np.testing.assert_allclose(np.diag(b.matrix), [1, 1, 1])
    c = math.sqrt(2) / 2 * 0.2
    assert b.matrix[0, 1] == pytest.approx(c)
    assert b.matrix[1, 2] == pytest.approx(c * math.sqrt(2))
    assert b.matrix[0, 2] == 0.0
    assert b.labels == ((-1, 0), (0, 1), (1, 2))
    for n in (1, 4, 9):
        for cons in models.RWA_PAIRINGS:
            blk = models.rwa_block(n, SystemParams(0.37, 0.8, 1.4), cons)
            assert np.trace(blk.matrix) == pytest.approx(3 * 1.4 * n)
    assert np.count_nonzero(models.rwa_block(3, SystemParams(1.0, 0.0)).matrix - 3 * np.eye(3)) == 0
    with pytest.raises(ArgumentError):
        models.rwa_block(0, SystemParams(1.0, 0.2))
    with pytest.raises(ArgumentError):
        models.rwa_block(1, SystemParams(1.0, 0.2), "bogus")


def test_rwa_block_other_pairing():
    b = models.rwa_block(1, SystemParams(1.0, 0.2), "n+jz")
    np.testing.assert_allclose(np.diag(b.matrix), [-1, 1, 3])
    assert b.labels == ((1, 0), (0, 1), (-1, 2))
    assert np.count_nonzero(models.rwa_block(3, SystemParams(1.0, 0.0), "n+jz").matrix
                            - np.diag([1.0, 3.0, 5.0])) == 0


@pytest.mark.parametrize("conserved", sorted(models.RWA_PAIRINGS))
def test_rwa_blocks_match_rotated_hamiltonian_without_dropped_terms(conserved):
    p = SystemParams(0.8, 0.3)
    N = 20
    h2 = models.build_rotated_hamiltonian(p, N)
    _, _, _, jp, jm = hilbert.spin1_operators()
    a = hilbert.annihilation(N)
    if conserved == "n-jz":
        dropped = hilbert.embed(jp, a) + hilbert.embed(jm, a.T)
    else:
        dropped = hilbert.embed(jp, a.T) + hilbert.embed(jm, a)
    np.testing.assert_allclose(models.rwa_hamiltonian(p, N, conserved), h2 - 0.5 * p.g * dropped,
                               atol=1e-14)


def test_rwa_block_assembly_completeness():
    N = 9
    blocks = models.rwa_blocks(SystemParams(1.0, 0.4), N)
    assert sum(b.size for b in blocks) == 1 + 2 + 3 * N
    labels = [lab for b in blocks for lab in b.labels]
    assert len(set(labels)) == len(labels)
    inside = {lab for lab in labels if lab[1] <= N}
    # one state at Fock level N belongs to excitation N+1
    assert len(inside) == 3 * (N + 1) - 1
    models.rwa_hamiltonian(SystemParams(1.0, 0.4), N)  # raises if any state is hit != once


def test_rwa_spectrum_limits():
    p0 = SystemParams(1.0, 0.0)
    np.testing.assert_allclose(models.rwa_spectrum(p0, 30, 8).energies,
                               models.exact_spectrum(p0, 30, 8).energies, atol=1e-12)
    for delta in (1.0, 0.5):
        p = SystemParams(delta, 0.01)
        diff = np.abs(models.rwa_spectrum(p, 30, 8).energies - models.exact_spectrum(p, 30, 8).energies)
        assert diff.max() < 1e-3


def test_other_pairing_is_off_resonant_at_resonance():
    # error linear in g for the counter-rotating pairing, quadratic for the resonant one
    p = SystemParams(1.0, 0.1)
    ex = models.exact_spectrum(p, 30, 6).energies
    good = np.abs(models.rwa_spectrum(p, 30, 6).energies - ex).max()
    bad = np.abs(models.rwa_spectrum(p, 30, 6, "n+jz").energies - ex).max()
    assert good < 0.01 < bad
    np.testing.assert_allclose(models.rwa_spectrum(SystemParams(0.5, 0.0), 30, 8).energies,
                               decoupled_levels(0.5, 1.0, 8), atol=1e-12)


def test_rwa_spectrum_matches_assembled_matrix():
    p = SystemParams(0.6, 0.45)
    N = 40
    ref = np.linalg.eigvalsh(models.rwa_hamiltonian(p, N))[:8]
    np.testing.assert_allclose(models.rwa_spectrum(p, N, 8).energies, ref, atol=1e-12)


def test_block_validation():
    with pytest.raises(ArgumentError):
        models.HamiltonianBlock(((0, 1), (0, 1)), np.eye(2))
    with pytest.raises(ArgumentError):
        models.HamiltonianBlock(((0, 1), (1, 0)), np.array([[0.0, 1.0], [0.5, 0.0]]))
    with pytest.raises(ArgumentError):
        models.HamiltonianBlock(((0, 1),), np.eye(2))
