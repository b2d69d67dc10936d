import numpy as np
import pytest

from qcosmo import evolution, models
from qcosmo.errors import ShapeError
from qcosmo.evolution import (
    exact_evolve,
    free_interval_hamiltonian,
    interval_propagation_profile,
    kernel,
    split_even_odd,
    trotter_evolve,
)


def random_state(rng, dim):
    psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return psi / np.linalg.norm(psi)


def random_hermitian(rng, dim):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2


def test_exact_evolve_t0():
    rng = np.random.default_rng(0)
    h = random_hermitian(rng, 8)
    psi = random_state(rng, 8)
    assert np.allclose(exact_evolve(h, 0.0, psi), psi, atol=1e-14)


def test_exact_evolve_z_phase():
    z = np.diag([1.0, -1.0]).astype(complex)
    out = exact_evolve(z, np.pi / 2, np.array([1, 0], dtype=complex))
    assert out[0] == pytest.approx(-1j, abs=1e-12)


def test_energy_conserved():
    rng = np.random.default_rng(1)
    for _ in range(5):
        h = random_hermitian(rng, 8)
        psi = random_state(rng, 8)
        out = exact_evolve(h, 0.73, psi)
        before = np.vdot(psi, h @ psi).real
        after = np.vdot(out, h @ out).real
        assert after == pytest.approx(before, abs=1e-10)


def test_time_composability():
    rng = np.random.default_rng(2)
    h = random_hermitian(rng, 8)
    psi = random_state(rng, 8)
    once = exact_evolve(h, 0.9, psi)
    twice = exact_evolve(h, 0.5, exact_evolve(h, 0.4, psi))
    assert np.max(np.abs(once - twice)) <= 1e-10


def test_single_part_equals_exact():
    rng = np.random.default_rng(3)
    h = random_hermitian(rng, 8)
    psi = random_state(rng, 8)
    for steps in (1, 7):
        res = trotter_evolve([h], 0.8, steps, 1, psi)
        assert np.max(np.abs(res.final - exact_evolve(h, 0.8, psi))) <= 1e-12


def test_commuting_parts_equal_exact():
    rng = np.random.default_rng(4)
    d1 = np.diag(rng.normal(size=8)).astype(complex)
    d2 = np.diag(rng.normal(size=8)).astype(complex)
    psi = random_state(rng, 8)
    res = trotter_evolve([d1, d2], 1.3, 3, 1, psi)
    assert np.max(np.abs(res.final - exact_evolve(d1 + d2, 1.3, psi))) <= 1e-12


def test_parts_vs_total_checked():
    rng = np.random.default_rng(5)
    h = random_hermitian(rng, 4)
    psi = random_state(rng, 4)
    with pytest.raises(ShapeError):
        trotter_evolve([h], 0.1, 1, 1, psi, total=h + 0.01 * np.eye(4))


def test_unitarity_and_fidelity_field():
    h = free_interval_hamiltonian(4)
    parts = split_even_odd(h)
    psi = np.zeros(16, dtype=complex)
    psi[8] = 1.0
    res = trotter_evolve(parts, 0.3, 16, 2, psi, compute_fidelity=True)
    assert abs(np.linalg.norm(res.final) - 1.0) <= 1e-9
    assert 0.99 <= res.fidelity_vs_exact <= 1.0 + 1e-12


def test_split_even_odd_sums_and_does_not_commute():
    h = free_interval_hamiltonian(5)
    even, odd = split_even_odd(h)
    assert np.max(np.abs(even + odd - h)) <= 1e-12
    assert np.max(np.abs(even @ odd - odd @ even)) > 1.0


@pytest.mark.parametrize("order,target", [(1, -1.0), (2, -2.0)])
def test_trotter_error_slopes(order, target):
    h = free_interval_hamiltonian(5)
    parts = split_even_odd(h)
    psi = np.zeros(32, dtype=complex)
    psi[16] = 1.0
    t = 0.1
    exact = exact_evolve(h, t, psi)
    errs = [
        np.linalg.norm(trotter_evolve(parts, t, s, order, psi).final - exact)
        for s in (8, 16, 32, 64)
    ]
    slope = np.polyfit(np.log([8, 16, 32, 64]), np.log(errs), 1)[0]
    assert abs(slope - target) <= 0.15


def test_kernel_basics():
    h = free_interval_hamiltonian(4)
    assert kernel(h, 0.0, 3, 3) == pytest.approx(1.0)
    assert kernel(h, 0.0, 3, 5) == pytest.approx(0.0, abs=1e-14)
    with pytest.raises(ShapeError):
        kernel(h, 0.1, 0, 99)


def test_kernel_symmetric_hamiltonian():
    h = free_interval_hamiltonian(4)
    k_if = kernel(h, 0.4, 2, 9)
    k_fi = kernel(h, 0.4, 9, 2)
    assert abs(k_if - k_fi) <= 1e-10


def test_interval_profile_tau0_delta():
    profs = interval_propagation_profile(5, [0.0], 16)
    assert profs[0].squared[16] == pytest.approx(1.0)
    assert np.sum(profs[0].squared) == pytest.approx(1.0, abs=1e-12)


def test_interval_profile_norms_and_spread():
    taus = [0.0, 0.05, 0.1, 0.2]
    profs = interval_propagation_profile(5, taus, 16)
    grid = profs[0].grid
    variances = []
    for p in profs:
        assert np.sum(p.squared) == pytest.approx(1.0, abs=1e-9)
        mean = np.sum(grid * p.squared)
        variances.append(np.sum((grid - mean) ** 2 * p.squared))
    assert all(b > a - 1e-15 for a, b in zip(variances, variances[1:]))
    # spreading stays symmetric about the launch point until walls matter;
    # the even/odd bond split leaves a Trotter-scale parity imprint
    last = profs[-1].squared
    for d in range(1, 13):
        assert last[16 + d] == pytest.approx(last[16 - d], abs=1e-4)


def test_interval_profile_matches_exact():
    taus = [0.1, 0.2]
    profs = interval_propagation_profile(5, taus, 16, steps=64, order=2)
    h = free_interval_hamiltonian(5)
    psi = np.zeros(32, dtype=complex)
    psi[16] = 1.0
    for tau, prof in zip(taus, profs):
        exact = exact_evolve(h, tau, psi)
        assert np.max(np.abs(prof.values - exact)) <= 1e-3


def test_double_well_initial_and_norm():
    params = models.MinisuperspaceParams(Lambda=-0.5, k_curv=-2.5, v_volume=1.0)
    taus = [0.0, 0.5, 1.0]
    profs = evolution.double_well_eoh(params, 5, taus, center=-1.58, width=0.35)
    initial = evolution.gaussian_on_grid(profs[0].grid, -1.58, 0.35)
    assert np.max(np.abs(profs[0].values - initial)) <= 1e-12
    for p in profs:
        assert np.sum(p.squared) == pytest.approx(1.0, abs=1e-9)


def test_double_well_tunneling_signature():
    """Probability beyond the barrier grows monotonically at early fifth time."""
    params = models.MinisuperspaceParams(Lambda=-0.5, k_curv=-2.5, v_volume=1.0)
    taus = [0.0, 0.25, 0.5, 1.0]
    profs = evolution.double_well_eoh(params, 5, taus, center=-1.58, width=0.35)
    grid = profs[0].grid
    right = [float(np.sum(p.squared[grid > 0])) for p in profs]
    assert all(b > a for a, b in zip(right, right[1:]))

    # cross-check the transfer against the exact propagator
    from qcosmo.bases import BasisKind, build_momentum_squared

    pot = 2 * params.k_curv * grid**2 - 2 * params.Lambda * grid**4
    h = build_momentum_squared(BasisKind.FINITE_DIFFERENCE, 32) / 2 + np.diag(pot.astype(complex))
    psi0 = evolution.gaussian_on_grid(grid, -1.58, 0.35)
    exact_right = [
        float(np.sum(np.abs(exact_evolve(h, t, psi0))[grid > 0] ** 2)) for t in taus
    ]
    assert all(b > a for a, b in zip(exact_right, exact_right[1:]))
    assert np.allclose(right, exact_right, atol=1e-4)
