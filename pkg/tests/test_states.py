import numpy as np
import pytest

from spinwitness.errors import BlochNormExceeded, NotHermitian, NotPSD, NotUnitTrace, Unphysical
from spinwitness.states import (
    Observables,
    ProductState,
    from_coupled_basis,
    magnetisation,
    observables,
    product_state_density,
    reduced_bloch,
    separable_singlet_fraction,
    singlet_fraction,
    to_coupled_basis,
    validate,
)

from helpers import KET_UD, KET_UU, SINGLET, projector, rand_density


def test_coupled_basis_of_singlet():
    c = to_coupled_basis(SINGLET)
    assert np.max(np.abs(c - np.diag([1.0, 0.0, 0.0, 0.0]))) <= 1e-12


def test_coupled_basis_of_up_up():
    c = to_coupled_basis(projector(KET_UU))
    assert np.max(np.abs(c - np.diag([0.0, 1.0, 0.0, 0.0]))) <= 1e-12


def test_coupled_basis_of_up_down():
    # |ud> = (|t0> + |s0>)/sqrt2: half population on each with +1/2 coherence
    c = to_coupled_basis(projector(KET_UD))
    expected = np.zeros((4, 4), dtype=complex)
    expected[0, 0] = expected[2, 2] = 0.5
    expected[0, 2] = expected[2, 0] = 0.5
    assert np.max(np.abs(c - expected)) <= 1e-12


def test_coupled_round_trip_and_spectrum():
    rng = np.random.default_rng(10)
    for _ in range(200):
        rho = rand_density(rng)
        c = to_coupled_basis(rho)
        assert np.max(np.abs(from_coupled_basis(c) - rho)) <= 1e-12
        assert abs(np.trace(c) - np.trace(rho)) <= 1e-12
        assert np.max(np.abs(np.linalg.eigvalsh(c) - np.linalg.eigvalsh(rho))) <= 1e-12
        assert abs(c[0, 0].real - singlet_fraction(rho)) <= 1e-12


def test_singlet_fraction_reference_values():
    assert abs(singlet_fraction(SINGLET) - 1.0) <= 1e-12
    assert abs(singlet_fraction(projector(KET_UD)) - 0.5) <= 1e-12
    # identical mixed spins of length 0.5 give (1 - m^2)/4
    p = ProductState([0, 0, 0.5], [0, 0, 0.5])
    assert abs(singlet_fraction(product_state_density(p)) - 0.1875) <= 1e-12


def test_magnetisation_reference_values():
    assert np.max(np.abs(magnetisation(SINGLET))) <= 1e-12
    assert np.allclose(magnetisation(projector(KET_UU)), [0, 0, 1], atol=1e-12)
    anti = product_state_density(ProductState([0, 0, 1], [0, 0, -1]))
    assert np.max(np.abs(magnetisation(anti))) <= 1e-12


def test_reduced_bloch_reference_values():
    ud = projector(KET_UD)
    assert np.allclose(reduced_bloch(ud, "A"), [0, 0, 1], atol=1e-12)
    assert np.allclose(reduced_bloch(ud, "B"), [0, 0, -1], atol=1e-12)
    assert np.max(np.abs(reduced_bloch(SINGLET, "A"))) <= 1e-12
    assert np.max(np.abs(reduced_bloch(SINGLET, "B"))) <= 1e-12


def test_reduced_bloch_recovers_product_vectors():
    rng = np.random.default_rng(11)
    for _ in range(100):
        va = rng.uniform(-1, 1, 3)
        va *= rng.uniform(0, 1) / np.linalg.norm(va)
        vb = rng.uniform(-1, 1, 3)
        vb *= rng.uniform(0, 1) / np.linalg.norm(vb)
        rho = product_state_density(ProductState(va, vb))
        assert np.max(np.abs(reduced_bloch(rho, "A") - va)) <= 1e-12
        assert np.max(np.abs(reduced_bloch(rho, "B") - vb)) <= 1e-12


def test_product_state_density_reference_values():
    up_up = product_state_density(ProductState([0, 0, 1], [0, 0, 1]))
    assert np.max(np.abs(up_up - projector(KET_UU))) <= 1e-12
    up_down = product_state_density(ProductState([0, 0, 1], [0, 0, -1]))
    assert np.max(np.abs(up_down - projector(KET_UD))) <= 1e-12
    mixed = product_state_density(ProductState([0, 0, 0], [0, 0, 0]))
    assert np.max(np.abs(mixed - np.eye(4) / 4)) <= 1e-12


def test_product_state_rejects_long_bloch():
    with pytest.raises(BlochNormExceeded):
        ProductState([0, 0, 1.1], [0, 0, 0])


def test_separable_singlet_fraction_matches_density():
    rng = np.random.default_rng(12)
    assert abs(separable_singlet_fraction(ProductState([0, 0, 1], [0, 0, -1])) - 0.5) <= 1e-12
    assert abs(separable_singlet_fraction(ProductState([0, 0, 1], [0, 0, 1]))) <= 1e-12
    assert abs(separable_singlet_fraction(ProductState([0, 0, 0.5], [0, 0, 0.5])) - 0.1875) <= 1e-12
    for _ in range(200):
        va = rng.normal(size=3)
        va *= rng.uniform(0, 1) / np.linalg.norm(va)
        vb = rng.normal(size=3)
        vb *= rng.uniform(0, 1) / np.linalg.norm(vb)
        p = ProductState(va, vb)
        direct = singlet_fraction(product_state_density(p))
        assert abs(separable_singlet_fraction(p) - direct) <= 1e-12


def test_validate_reference_cases():
    ok = validate(np.eye(4) / 4)
    assert not ok.flags.writeable
    with pytest.raises(NotPSD):
        validate(np.diag([0.5, 0.5, 0.5, -0.5]))
    with pytest.raises(NotUnitTrace):
        validate(np.diag([0.6, 0.6, 0.0, 0.0]))
    bad = np.eye(4, dtype=complex) / 4
    bad[0, 1] = 0.1
    with pytest.raises(NotHermitian):
        validate(bad)


def test_magnetisation_is_mean_of_reduced_blochs():
    rng = np.random.default_rng(13)
    worst = 0.0
    for _ in range(10000):
        rho = rand_density(rng)
        m = magnetisation(rho)
        avg = (reduced_bloch(rho, "A") + reduced_bloch(rho, "B")) / 2.0
        worst = max(worst, float(np.max(np.abs(m - avg))))
    assert worst <= 1e-10


def test_bloch_angle_relation_for_product_states():
    # |m|^2 = (v_A^2 + v_B^2 + 2 v_A v_B cos beta) / 4 for any product state
    rng = np.random.default_rng(14)
    worst = 0.0
    for _ in range(10000):
        va = rng.normal(size=3)
        va *= rng.uniform(0, 1) / np.linalg.norm(va)
        vb = rng.normal(size=3)
        vb *= rng.uniform(0, 1) / np.linalg.norm(vb)
        m = magnetisation(product_state_density(ProductState(va, vb)))
        expected = (va @ va + vb @ vb + 2.0 * va @ vb) / 4.0
        worst = max(worst, abs(float(m @ m) - expected))
    assert worst <= 1e-10


def test_physical_bound_on_random_states():
    rng = np.random.default_rng(15)
    for _ in range(5000):
        rho = rand_density(rng)
        p_s = singlet_fraction(rho)
        m = float(np.linalg.norm(magnetisation(rho)))
        assert p_s <= 1.0 - m + 1e-9


def test_aligned_singlet_fraction_decomposition():
    # with A along z: p_s = (p_up c_dd + p_down c_uu) / 2
    rng = np.random.default_rng(16)
    for _ in range(300):
        va_len = rng.uniform(0, 1)
        vb = rng.normal(size=3)
        vb *= rng.uniform(0, 1) / np.linalg.norm(vb)
        p = ProductState([0, 0, va_len], vb)
        p_up, p_down = (1 + va_len) / 2, (1 - va_len) / 2
        c_uu, c_dd = (1 + vb[2]) / 2, (1 - vb[2]) / 2
        expected = (p_up * c_dd + p_down * c_uu) / 2
        assert abs(separable_singlet_fraction(p) - expected) <= 1e-12


def test_observables_validation():
    obs = observables(validate(np.eye(4) / 4))
    assert abs(obs.singlet_fraction - 0.25) <= 1e-12
    with pytest.raises(Unphysical):
        Observables(0.9, [0.0, 0.0, 0.5])
    with pytest.raises(ValueError):
        Observables(1.5, [0, 0, 0])
