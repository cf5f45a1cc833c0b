import numpy as np
import pytest
from scipy.integrate import solve_ivp
from scipy.linalg import expm

from berry_concurrence.errors import BadSteps, ZeroState
from berry_concurrence.evolution import (
    cyclic_evolve_pair, cyclic_phase_record, exact_propagator, pair_state, propagate,
)
from berry_concurrence.geometric import angle_distance, closed_form_gamma
from berry_concurrence.linalg import SX, SY, SZ, is_unitary
from berry_concurrence.spin import FieldConfig, hamiltonian, instantaneous_eigenstates

from conftest import random_state


def ode_reference(psi0, cfg, t1):
    def rhs(t, y):
        return -1j * hamiltonian(cfg, t) @ y
    sol = solve_ivp(rhs, (0.0, t1), np.asarray(psi0, dtype=complex), method="DOP853",
                    rtol=1e-12, atol=1e-13)
    return sol.y[:, -1]


def test_zero_field_is_identity():
    cfg = FieldConfig(0.8, 1.0, 0.0)
    psi = np.array([0.6, 0.8j])
    res = propagate(psi, cfg, 0.0, cfg.period, 100)
    assert np.array_equal(res.final_state, psi)
    assert res.dynamical_phase == 0.0


def test_aligned_field_phase():
    cfg = FieldConfig(0.0, 1.0, 7.0)
    res = propagate([1, 0], cfg, 0.0, cfg.period, 1000)
    tau = cfg.period
    assert np.allclose(res.final_state, [np.exp(-0.5j * 7.0 * tau), 0], atol=1e-12)
    assert np.isclose(res.dynamical_phase, -0.5 * 7.0 * tau, atol=1e-12)


def test_adiabatic_geometric_phase():
    rec = cyclic_phase_record(FieldConfig(np.pi / 3, 1.0, 500.0), 200_000)
    assert abs(rec.geometric - (-np.pi / 2)) < 1e-2
    assert angle_distance(rec.total, rec.geometric + rec.dynamical) < 1e-9


def test_exact_propagator_examples():
    cfg = FieldConfig(0.0, 1.3, 4.0)
    assert np.allclose(exact_propagator(cfg, 0.0), np.eye(2))
    t = 0.77
    assert np.allclose(exact_propagator(cfg, t), expm(-0.5j * 4.0 * t * SZ), atol=1e-14)


def test_exact_propagator_against_expm(rng):
    for _ in range(10):
        cfg = FieldConfig(rng.uniform(0, np.pi), rng.uniform(0.2, 2), rng.uniform(0.5, 10))
        t = rng.uniform(0, 5)
        n0 = np.array([np.sin(cfg.phi), 0.0, np.cos(cfg.phi)])
        h_rot = 0.5 * cfg.omega_larmor * (n0[0] * SX + n0[2] * SZ) - 0.5 * cfg.omega0 * SZ
        ref = expm(-0.5j * cfg.omega0 * t * SZ) @ expm(-1j * h_rot * t)
        u = exact_propagator(cfg, t)
        assert np.max(np.abs(u - ref)) < 1e-12
        assert is_unitary(u, 1e-12)


def test_exact_propagator_solves_schrodinger(rng):
    for _ in range(5):
        cfg = FieldConfig(rng.uniform(0, np.pi), rng.uniform(0.2, 2), rng.uniform(0.5, 6))
        psi = random_state(rng, 2)
        t = rng.uniform(0.5, 4)
        assert np.linalg.norm(exact_propagator(cfg, t) @ psi - ode_reference(psi, cfg, t)) < 1e-9


def test_propagate_matches_exact_propagator(rng):
    for _ in range(5):
        cfg = FieldConfig(rng.uniform(0, np.pi), 1.0, rng.uniform(1, 10))
        psi = random_state(rng, 2)
        res = propagate(psi, cfg, 0.0, cfg.period, 100_000)
        assert np.linalg.norm(exact_propagator(cfg, cfg.period) @ psi - res.final_state) < 1e-6


def test_second_order_convergence():
    cfg = FieldConfig(0.7, 1.0, 5.0)
    psi = np.array([0.6, 0.8j])
    exact = exact_propagator(cfg, cfg.period) @ psi
    errs = [np.linalg.norm(propagate(psi, cfg, 0.0, cfg.period, n).final_state - exact)
            for n in (1000, 2000, 4000)]
    for e1, e2 in zip(errs, errs[1:]):
        assert 3.5 <= e1 / e2 <= 4.5


def test_unitarity_at_default_steps(rng):
    for ratio in (1.0, 100.0, 1000.0):
        cfg = FieldConfig(rng.uniform(0, np.pi), 1.0, ratio)
        res = propagate(random_state(rng, 2), cfg, 0.0, cfg.period)
        assert res.steps == 10_000
        assert res.unitarity_defect < 1e-8


def test_composition():
    cfg = FieldConfig(1.1, 1.0, 8.0)
    psi = np.array([0.6, 0.8j])
    whole = propagate(psi, cfg, 0.0, 2.0, 2000)
    first = propagate(psi, cfg, 0.0, 1.0, 1000)
    second = propagate(first.final_state, cfg, 1.0, 2.0, 1000)
    assert np.linalg.norm(whole.final_state - second.final_state) < 1e-8
    assert abs(whole.dynamical_phase - first.dynamical_phase - second.dynamical_phase) < 1e-8


def test_adiabatic_following():
    cfg = FieldConfig(np.pi / 3, 1.0, 500.0)
    up0, _ = instantaneous_eigenstates(cfg, 0.0)
    for t in np.linspace(0.3, cfg.period, 7):
        up_t, _ = instantaneous_eigenstates(cfg, t)
        assert abs(np.vdot(up_t, exact_propagator(cfg, t) @ up0)) ** 2 >= 0.999
    res = propagate(up0, cfg, 0.0, 2.0, 20_000)
    up_t, _ = instantaneous_eigenstates(cfg, 2.0)
    assert abs(np.vdot(up_t, res.final_state)) ** 2 >= 0.999


def test_two_spin_propagation_factorizes(rng):
    cfg = FieldConfig(0.9, 1.0, 4.0)
    a, b = random_state(rng, 2), random_state(rng, 2)
    res = propagate(np.kron(a, b), cfg, 0.0, cfg.period, 4000)
    u = exact_propagator(cfg, cfg.period)
    assert np.linalg.norm(res.final_state - np.kron(u @ a, u @ b)) < 1e-5
    single_a = propagate(a, cfg, 0.0, cfg.period, 4000)
    single_b = propagate(b, cfg, 0.0, cfg.period, 4000)
    assert np.isclose(res.dynamical_phase, single_a.dynamical_phase + single_b.dynamical_phase)


def test_propagate_rejects_bad_steps():
    cfg = FieldConfig(0.5)
    for bad in (0, -3, 2.5):
        with pytest.raises(BadSteps):
            propagate([1, 0], cfg, 0.0, 1.0, bad)


def test_cyclic_evolve_pair_examples():
    cfg = FieldConfig(0.7)
    gp, gm = closed_form_gamma(0.7)
    _, dn = instantaneous_eigenstates(cfg, 0.0)
    assert np.allclose(cyclic_evolve_pair(2.0, 0.0, cfg), np.exp(2j * gm) * np.kron(dn, dn))
    cfg = FieldConfig(np.pi / 2)
    assert np.allclose(cyclic_evolve_pair(1.0, 1.0, cfg), pair_state(1.0, 1.0, cfg), atol=1e-14)
    with pytest.raises(ZeroState):
        cyclic_evolve_pair(0, 0, cfg)


def test_cyclic_evolve_pair_overlap(rng):
    for _ in range(50):
        a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
        phi = rng.uniform(0, np.pi)
        cfg = FieldConfig(phi)
        gp, gm = closed_form_gamma(phi)
        m = abs(a) ** 2 + abs(b) ** 2
        expected = (abs(a) ** 2 * np.exp(2j * gm) + abs(b) ** 2 * np.exp(2j * gp)) / m
        got = np.vdot(pair_state(a, b, cfg), cyclic_evolve_pair(a, b, cfg))
        assert abs(got - expected) < 1e-12
        assert abs(np.linalg.norm(cyclic_evolve_pair(a, b, cfg)) - 1) < 1e-12
