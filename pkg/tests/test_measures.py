"""Purity, concurrence, entanglement of formation, negativity, Fannes bound."""

import numpy as np
import pytest

from xtangle import (
    OutOfRegimeError,
    binary_entropy,
    concurrence_general,
    concurrence_x,
    eof,
    fannes_ree_bound,
    is_separable,
    negativity_general,
    negativity_x,
    partial_transpose,
    purity_general,
    purity_x,
    random_xparams,
    to_density,
    trace_norm,
)

from reference_states import (
    BELL_PHI_PLUS,
    M30A,
    M30A_NEGATIVITY,
    M30B,
    M30B_NEGATIVITY,
    M40,
    M40_CONCURRENCE,
    M40_NEGATIVITY,
    M40_PURITY,
    MAX_MIXED,
    pure_outer,
    random_density_np,
)


def test_purity():
    assert purity_general(MAX_MIXED) == pytest.approx(0.25, abs=1e-14)
    assert purity_general(BELL_PHI_PLUS) == pytest.approx(1.0, abs=1e-14)
    assert purity_general(M40) == pytest.approx(M40_PURITY, abs=1e-12)


def test_purity_x_matches_trace():
    for i in range(200):
        p = random_xparams(5000 + i)
        assert purity_x(p) == pytest.approx(purity_general(to_density(p)), abs=1e-12)


def test_concurrence_reference():
    assert concurrence_general(BELL_PHI_PLUS) == pytest.approx(1.0, abs=1e-12)
    assert concurrence_general(MAX_MIXED) == pytest.approx(0.0, abs=1e-12)
    assert concurrence_general(M40) == pytest.approx(M40_CONCURRENCE, abs=1e-12)
    assert concurrence_general(np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)) == 0.0


def test_concurrence_x_pure_family():
    for c in (0.0, 0.3, 0.7, 1.0):
        assert concurrence_x(pure_outer(c)) == pytest.approx(c, abs=1e-12)


def test_concurrence_x_reference():
    assert concurrence_x(M30A) == pytest.approx(M40_CONCURRENCE, abs=1e-12)
    assert concurrence_x(M30B) == pytest.approx(M40_CONCURRENCE, abs=1e-12)


def test_concurrence_x_matches_general():
    for i in range(300):
        rho = to_density(random_xparams(6000 + i))
        assert concurrence_x(rho) == pytest.approx(
            concurrence_general(rho), abs=1e-10)


def test_binary_entropy():
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.5) == pytest.approx(1.0, abs=1e-14)
    assert binary_entropy(0.9) == pytest.approx(0.4689955935892812, abs=1e-13)


def test_eof():
    assert eof(BELL_PHI_PLUS) == pytest.approx(1.0, abs=1e-12)
    assert eof(MAX_MIXED) == pytest.approx(0.0, abs=1e-12)
    # C = 0.6 -> (1 + sqrt(1 - 0.36)) / 2 = 0.9
    assert eof(pure_outer(0.6)) == pytest.approx(0.4689955935892812, abs=1e-12)


def test_eof_monotone_in_concurrence():
    grid = [eof(pure_outer(c)) for c in np.linspace(0.0, 1.0, 101)]
    assert all(b > a for a, b in zip(grid, grid[1:]))


def test_negativity_reference():
    assert negativity_general(BELL_PHI_PLUS) == pytest.approx(0.5, abs=1e-12)
    assert negativity_general(MAX_MIXED) == pytest.approx(0.0, abs=1e-12)
    assert negativity_general(M40) == pytest.approx(M40_NEGATIVITY, abs=1e-12)
    assert negativity_x(M30A) == pytest.approx(M30A_NEGATIVITY, abs=1e-12)
    assert negativity_x(M30B) == pytest.approx(M30B_NEGATIVITY, abs=1e-12)


def test_negativity_trace_norm_form():
    rng = np.random.default_rng(31)
    for _ in range(100):
        rho = random_density_np(rng)
        alt = (trace_norm(partial_transpose(rho)) - 1.0) / 2.0
        assert negativity_general(rho) == pytest.approx(max(0.0, alt), abs=1e-11)


def test_negativity_x_matches_general():
    for i in range(300):
        rho = to_density(random_xparams(7000 + i))
        assert negativity_x(rho) == pytest.approx(
            negativity_general(rho), abs=1e-10)
    assert negativity_x(np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)) == 0.0


def test_local_unitary_invariance():
    rng = np.random.default_rng(32)
    for _ in range(50):
        rho = random_density_np(rng)
        u1, _ = np.linalg.qr(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
        u2, _ = np.linalg.qr(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
        u = np.kron(u1, u2)
        out = u @ rho @ u.conj().T
        assert concurrence_general(out) == pytest.approx(
            concurrence_general(rho), abs=1e-9)
        assert negativity_general(out) == pytest.approx(
            negativity_general(rho), abs=1e-9)


def test_zero_iff_separable():
    for i in range(300):
        p = random_xparams(8000 + i)
        rho = to_density(p)
        conc = concurrence_x(rho) > 1e-9
        neg = negativity_x(rho) > 1e-9
        assert conc == neg == (not is_separable(p))


def test_fannes_bound():
    a = np.diag([1.0, 0.0, 0.0, 0.0]).astype(complex)
    assert fannes_ree_bound(a, a) == 0.0
    b = np.diag([5.0 / 6.0, 1.0 / 6.0, 0.0, 0.0]).astype(complex)
    # t = 1/3 exactly: 8/3 - (2/3) log2(1/3)
    assert fannes_ree_bound(a, b) == pytest.approx(3.7233083338141038, abs=1e-12)
    c = np.diag([0.8, 0.2, 0.0, 0.0]).astype(complex)
    with pytest.raises(OutOfRegimeError):
        fannes_ree_bound(a, c)
