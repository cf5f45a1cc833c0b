import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from berry_concurrence.errors import DegeneratePath, DomainError, ZeroVisibility
from berry_concurrence.geometric import (
    angle_distance, bell_evolve, bell_state, bell_transition_matrix, closed_form_gamma,
    composition_raw, eigenstate_loop, entangled_loop, pancharatnam_overlap, sigma_matrix,
    three_spin_phase, wilson_loop_phase, wrap_negative, wrap_principal,
)
from berry_concurrence.linalg import is_unitary
from berry_concurrence.spin import FieldConfig

from conftest import random_state

seeds = st.integers(0, 2**32 - 1)


def test_wrapping():
    assert wrap_negative(0.0) == 0.0
    assert wrap_negative(-2 * np.pi) == 0.0
    assert np.isclose(wrap_negative(0.5), 0.5 - 2 * np.pi)
    assert np.isclose(wrap_negative(-7.0), -7.0 + 2 * np.pi)
    assert wrap_principal(np.pi) == np.pi and wrap_principal(-np.pi) == np.pi
    assert np.isclose(angle_distance(0.1, 2 * np.pi - 0.1), 0.2)


def test_closed_form_examples():
    assert closed_form_gamma(0.0) == (0.0, -2 * np.pi)
    assert closed_form_gamma(np.pi) == (-2 * np.pi, 0.0)
    gp, gm = closed_form_gamma(np.pi / 2)
    assert np.isclose(gp, -np.pi) and np.isclose(gm, -np.pi)
    with pytest.raises(DomainError):
        closed_form_gamma(-0.5)


def test_closed_form_is_half_solid_angle():
    for phi in np.linspace(0, np.pi, 64):
        solid = 2 * np.pi * (1 - np.cos(phi))
        assert abs(closed_form_gamma(phi)[0] + solid / 2) < 1e-14


def test_wilson_loop_examples():
    assert abs(wilson_loop_phase(eigenstate_loop(FieldConfig(np.pi / 2), 10_000)) + np.pi) < 1e-6
    assert abs(wilson_loop_phase(eigenstate_loop(FieldConfig(0.0), 100))) < 1e-12


@pytest.mark.parametrize("phi", [0.3, 1.1, 2.0, 2.9])
def test_wilson_loop_both_branches(phi):
    cfg = FieldConfig(phi, omega0=3.0)
    gp, gm = closed_form_gamma(phi)
    assert angle_distance(wilson_loop_phase(eigenstate_loop(cfg, 10_000, "up")), gp) < 1e-6
    assert angle_distance(wilson_loop_phase(eigenstate_loop(cfg, 10_000, "down")), gm) < 1e-6


def test_wilson_loop_converges_quadratically():
    phi = np.pi / 3
    gp, _ = closed_form_gamma(phi)
    e1 = abs(wilson_loop_phase(eigenstate_loop(FieldConfig(phi), 1_000)) - gp)
    e2 = abs(wilson_loop_phase(eigenstate_loop(FieldConfig(phi), 10_000)) - gp)
    order = np.log10(e1 / e2)
    assert 1.7 <= order <= 2.3


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_wilson_loop_gauge_invariant(seed):
    rng = np.random.default_rng(seed)
    path = eigenstate_loop(FieldConfig(rng.uniform(0.1, 3.0)), 200)
    gauged = path * np.exp(1j * rng.uniform(-10, 10, size=(len(path), 1)))
    assert angle_distance(wilson_loop_phase(path), wilson_loop_phase(gauged)) < 1e-12


def test_wilson_loop_errors():
    with pytest.raises(DegeneratePath):
        wilson_loop_phase([[1, 0], [0, 1], [1, 0]])
    with pytest.raises(DomainError):
        wilson_loop_phase([[1, 0], [1, 0]])


def test_entangled_loop_weighted_sum():
    # coefficients of the phi-parameterized pair
    for phi in (0.4, 1.3, 2.5):
        a, b = np.sqrt(2) * np.cos(phi / 4) ** 2, np.sqrt(2) * np.sin(phi / 4) ** 2
        m = a * a + b * b
        gp, gm = closed_form_gamma(phi)
        expected = 2 / m * (a * a * gm + b * b * gp)
        got = wilson_loop_phase(entangled_loop(a, b, FieldConfig(phi), 10_000))
        assert angle_distance(got, expected) < 1e-6


def test_pancharatnam_examples():
    gp = closed_form_gamma(0.8)[0]
    ov, rec = pancharatnam_overlap(1.0, 0.0, gp)
    assert angle_distance(rec.geometric, 2 * closed_form_gamma(0.8)[1]) < 1e-12
    assert np.isclose(rec.visibility, 1.0)

    gp = closed_form_gamma(np.pi / 3)[0]
    for a, b in ((1, 0.3), (0.2, 2j), (1, 1)):
        ov, rec = pancharatnam_overlap(a, b, gp)
        assert abs(ov + 1) < 1e-14
        assert angle_distance(rec.geometric, np.pi) < 1e-14
        assert np.isclose(rec.visibility, 1.0)

    ov, rec = pancharatnam_overlap(1.0, 1.0, -np.pi)
    assert abs(ov - 1) < 1e-14 and abs(rec.geometric) < 1e-14
    assert rec.total == rec.geometric and rec.dynamical == 0.0


def test_pancharatnam_zero_visibility():
    # gamma_+ = -pi/4: branches e^{+-i pi/2} cancel for equal weights
    with pytest.raises(ZeroVisibility):
        pancharatnam_overlap(1.0, 1.0, -np.pi / 4)


def test_composition_raw():
    g = 0.37
    assert np.isclose(composition_raw(1, 0, g), np.exp(-2j * g))
    assert np.isclose(composition_raw(1 / np.sqrt(2), 1 / np.sqrt(2), -np.pi), np.sqrt(2))
    assert np.isclose(composition_raw(0.5, 0.5, -np.pi / 2), -1)


def test_sigma_matrix_examples():
    assert np.allclose(sigma_matrix(0.0), np.eye(2))
    assert np.allclose(sigma_matrix(-np.pi), -np.eye(2), atol=1e-15)
    assert np.allclose(sigma_matrix(-np.pi / 2), [[0, -1j], [-1j, 0]], atol=1e-15)


def test_sigma_matrix_group_and_unitarity():
    for g in np.linspace(-2 * np.pi, 2 * np.pi, 64):
        s = sigma_matrix(g)
        assert np.max(np.abs(s @ sigma_matrix(-g) - np.eye(2))) < 1e-14
        assert is_unitary(s, 1e-14)
        assert abs(np.linalg.det(s) - 1) < 1e-14


def test_printed_sigma_is_not_unitary():
    g = -np.pi / 3
    printed = np.array([[np.cos(g), -1j * np.sin(g)], [1j * np.sin(g), np.cos(g)]])
    assert not is_unitary(printed, 1e-3)
    assert np.max(np.abs(bell_transition_matrix(g) - printed)) > 0.1


def test_bell_evolve_examples():
    for which in ("plus", "minus"):
        assert np.allclose(bell_evolve(which, 0.0), bell_state(which))
        assert np.allclose(bell_evolve(which, -np.pi), -bell_state(which), atol=1e-15)
    assert np.allclose(bell_evolve("plus", -np.pi / 2), -1j * bell_state("minus"), atol=1e-15)


def test_bell_evolve_matches_sigma():
    for g in np.linspace(-2 * np.pi, 0, 64):
        basis = [bell_state("plus"), bell_state("minus")]
        for i, which in enumerate(("plus", "minus")):
            ev = bell_evolve(which, g)
            amps = [np.vdot(b, ev) for b in basis]
            assert np.max(np.abs(np.array(amps) - sigma_matrix(g)[i])) < 1e-12


def test_three_spin_examples():
    value, phase = three_spin_phase((1, 0, 0), (1.0, 0.0, 0.0), (0.0, 0.0, 0.5))
    assert np.isclose(phase, 1.5)
    value, phase = three_spin_phase((0.2, 0.3, 0.5), (0, 0, 0), (0, 0, 0))
    assert np.isclose(value, 1) and phase == 0.0
    with pytest.raises(ZeroVisibility):
        three_spin_phase((0.5, 0.5, 0), (np.pi, 0, 0), (0, 0, 0))


def test_three_spin_reduces_to_pair_phase(rng):
    # single nonzero weight: phase = gamma(pair) + gamma(remaining spin) mod 2 pi
    for _ in range(20):
        x, y = rng.uniform(-10, 10, 2)
        _, phase = three_spin_phase((0, 0, 2.0), (0, 0, x), (0, y, 0))
        assert angle_distance(phase, x + y) < 1e-12
