import numpy as np
import pytest

from spinwitness.concurrence import wootters_concurrence
from spinwitness.states import (
    SZ_COUPLED,
    magnetisation,
    singlet_fraction,
    to_coupled_basis,
)
from spinwitness.twirl import twirl_analytic, twirl_numeric

from helpers import KET_BELL_PHI_PLUS, KET_UD, SINGLET, projector, rand_density


def test_twirl_fixes_sz_zero_block_states():
    ud = projector(KET_UD)
    assert np.max(np.abs(twirl_analytic(ud) - ud)) <= 1e-12
    assert np.max(np.abs(twirl_analytic(SINGLET) - SINGLET)) <= 1e-12
    assert np.max(np.abs(twirl_numeric(ud, 16) - ud)) <= 1e-12


def test_twirl_decoheres_bell_state():
    # (|uu> + |dd>)/sqrt2 averages to an even t1 / t-1 mixture
    spun = twirl_analytic(projector(KET_BELL_PHI_PLUS))
    expected = np.diag([0.5, 0.0, 0.0, 0.5]).astype(complex)
    assert np.max(np.abs(spun - expected)) <= 1e-12
    assert np.max(np.abs(twirl_numeric(projector(KET_BELL_PHI_PLUS), 16) - expected)) <= 1e-12


def test_numeric_matches_analytic():
    rng = np.random.default_rng(40)
    worst = 0.0
    for _ in range(1000):
        rho = rand_density(rng)
        worst = max(worst, float(np.max(np.abs(twirl_analytic(rho) - twirl_numeric(rho, 16)))))
    assert worst <= 1e-10


def test_numeric_grid_sizes_agree():
    rng = np.random.default_rng(41)
    rho = rand_density(rng)
    for n in (8, 9, 16, 33):
        assert np.max(np.abs(twirl_numeric(rho, n) - twirl_analytic(rho))) <= 1e-10


def test_numeric_rejects_coarse_grid():
    with pytest.raises(ValueError, match=">= 8"):
        twirl_numeric(SINGLET, 4)


def test_twirl_is_idempotent():
    rng = np.random.default_rng(42)
    for _ in range(500):
        t = twirl_analytic(rand_density(rng))
        assert np.max(np.abs(twirl_analytic(t) - t)) <= 1e-12


def test_twirl_preserves_singlet_fraction_and_mz():
    rng = np.random.default_rng(43)
    for _ in range(500):
        rho = rand_density(rng)
        t = twirl_analytic(rho)
        assert abs(singlet_fraction(t) - singlet_fraction(rho)) <= 1e-12
        assert abs(magnetisation(t)[2] - magnetisation(rho)[2]) <= 1e-12


def test_twirl_preserves_z_aligned_magnetisation():
    rho = np.diag([0.5, 0.3, 0.15, 0.05]).astype(complex)
    assert np.max(np.abs(magnetisation(twirl_analytic(rho)) - magnetisation(rho))) <= 1e-12


def test_twirl_output_has_spun_shape():
    rng = np.random.default_rng(44)
    mask = ~np.equal.outer(SZ_COUPLED, SZ_COUPLED)
    for _ in range(500):
        coupled = to_coupled_basis(twirl_analytic(rand_density(rng)))
        assert np.max(np.abs(coupled[mask])) < 1e-12


def test_twirl_never_increases_concurrence():
    rng = np.random.default_rng(45)
    worst = -np.inf
    for _ in range(2000):
        rho = rand_density(rng)
        c_orig = wootters_concurrence(rho).concurrence
        c_spun = wootters_concurrence(twirl_analytic(rho)).concurrence
        worst = max(worst, c_spun - c_orig)
    assert worst <= 1e-9
