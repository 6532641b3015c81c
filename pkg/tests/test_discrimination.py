import numpy as np
import pytest
from hypothesis import given, settings

from conftest import alphas, angles, random_state
from qudit_eraser.discrimination import (
    DegenerateProblem,
    DiscriminationProblem,
    brute_force_optimal_basis,
    canonical_symmetric_pair,
    distinguishability,
    erasing_basis,
    guess_success_probability,
    optimal_path_entropy,
    path_conditional_entropy,
    plane_frame,
    symmetric_basis,
)
from qudit_eraser.qstate import bloch_rotation, fidelity, ket, phi_state

# min over bases of H(P|M) for |0>, phi(3pi/4): independent 721x721 grid plus
# Nelder-Mead over (theta, azimuth), agreeing with h2((1 + sin(3pi/8))/2)
H_PATH_3PI_4 = 0.233326628650935


def eq9(alpha):
    s1 = np.array([np.cos((np.pi + alpha) / 4), -1j * np.sin((np.pi + alpha) / 4)])
    s2 = np.array([np.cos((np.pi - alpha) / 4), 1j * np.sin((np.pi - alpha) / 4)])
    return s1, s2


@pytest.mark.parametrize("alpha", [np.pi, np.pi / 2, 0.3])
def test_symmetric_basis_reproduces_closed_form(alpha):
    basis = symmetric_basis(DiscriminationProblem.canonical(alpha))
    s1, s2 = eq9(alpha)
    assert fidelity(basis[0], s1) == pytest.approx(1.0, abs=1e-12)
    assert fidelity(basis[1], s2) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=60)
@given(alphas, angles)
def test_symmetric_placement(alpha, beta):
    prob = DiscriminationProblem.canonical(alpha, beta)
    b = symmetric_basis(prob).matrix
    ov = np.abs(b.conj().T @ np.stack([prob.phi1.amplitudes, prob.phi2.amplitudes]).T)
    assert ov[0, 0] == pytest.approx(ov[1, 1], abs=1e-12)
    assert ov[0, 1] == pytest.approx(ov[1, 0], abs=1e-12)


def test_orthogonal_and_identical_pairs():
    orth = DiscriminationProblem.canonical(np.pi)
    assert guess_success_probability(orth) == pytest.approx(1.0)
    assert distinguishability(orth) == pytest.approx(1.0)
    same = DiscriminationProblem(ket(0), ket(0))
    assert guess_success_probability(same) == pytest.approx(0.5)
    assert distinguishability(same) == pytest.approx(0.0, abs=1e-15)


@given(alphas)
def test_success_probability_closed_form(alpha):
    prob = DiscriminationProblem.canonical(alpha)
    assert guess_success_probability(prob) == pytest.approx((1 + np.sin(alpha / 2)) / 2, abs=1e-12)


def test_path_entropy_examples():
    assert path_conditional_entropy(DiscriminationProblem.canonical(np.pi)) == pytest.approx(0.0, abs=1e-12)
    assert path_conditional_entropy(DiscriminationProblem.canonical(0.0)) == pytest.approx(1.0, abs=1e-12)
    h = path_conditional_entropy(DiscriminationProblem.canonical(0.75 * np.pi))
    assert h == pytest.approx(H_PATH_3PI_4, abs=1e-12)
    assert optimal_path_entropy(0.75 * np.pi) == pytest.approx(H_PATH_3PI_4, abs=1e-12)


def test_qubit_frame_is_rz_canonicalization():
    for beta in np.linspace(0, 2 * np.pi, 9):
        fr = plane_frame(DiscriminationProblem.canonical(1.2, beta))
        rz = bloch_rotation("z", beta - 1.5 * np.pi)
        # both diagonal, equal up to one global phase
        np.testing.assert_allclose(fr.frame[[0, 1], [1, 0]], 0, atol=1e-12)
        ratio = np.diag(fr.frame) / np.diag(rz)
        assert ratio[1] == pytest.approx(ratio[0], abs=1e-12)
        assert abs(ratio[0]) == pytest.approx(1.0)


@given(alphas, angles, angles)
def test_rz_conjugation_invariance(alpha, beta, theta):
    prob = DiscriminationProblem.canonical(alpha, beta)
    rz = bloch_rotation("z", theta)
    rotated = DiscriminationProblem(prob.phi1.evolve(rz), prob.phi2.evolve(rz))
    for f in (path_conditional_entropy, guess_success_probability, distinguishability):
        assert f(rotated) == pytest.approx(f(prob), abs=1e-12)


def test_plane_property_for_qudits(rng):
    for _ in range(10):
        phi1, phi2 = random_state(rng, 5), random_state(rng, 5)
        prob = DiscriminationProblem(phi1, phi2)
        b = symmetric_basis(prob).matrix
        span = np.linalg.qr(np.stack([phi1, phi2]).T)[0]
        p_span = span @ span.conj().T
        p_pair = b[:, :2] @ b[:, :2].conj().T
        np.testing.assert_allclose(p_pair, p_span, atol=1e-10)
        for v in (phi1, phi2):
            probs = np.abs(b.conj().T @ v) ** 2
            assert probs[:2].sum() == pytest.approx(1.0, abs=1e-10)
            np.testing.assert_allclose(probs[2:], 0, atol=1e-10)


def test_degenerate_problems():
    prob = DiscriminationProblem(ket(0), np.exp(0.3j) * ket(0).amplitudes)
    basis = symmetric_basis(prob)
    s1, s2 = eq9(0.0)
    assert fidelity(basis[0], s1) == pytest.approx(1.0)
    assert fidelity(basis[1], s2) == pytest.approx(1.0)
    with pytest.raises(DegenerateProblem):
        symmetric_basis(DiscriminationProblem(ket(0, 3), ket(0, 3)))


def test_brute_force_examples():
    _, h = brute_force_optimal_basis(DiscriminationProblem.canonical(0.0), n_samples=500)
    assert h == pytest.approx(1.0, abs=1e-12)
    prob = DiscriminationProblem.canonical(np.pi / 2)
    _, h = brute_force_optimal_basis(prob)
    assert h == pytest.approx(path_conditional_entropy(prob), abs=1e-9)
    with pytest.raises(ValueError):
        brute_force_optimal_basis(prob, n_samples=99)


def test_symmetric_basis_optimal_on_random_qubits(rng):
    worst = -np.inf
    for _ in range(200):
        prob = DiscriminationProblem(random_state(rng, 2), random_state(rng, 2))
        _, h_bf = brute_force_optimal_basis(prob, n_samples=2000, n_refine=3)
        worst = max(worst, path_conditional_entropy(prob) - h_bf)
    assert worst <= 1e-9


def test_full_dimension_probes_never_win(rng):
    prob = DiscriminationProblem(random_state(rng, 5), random_state(rng, 5))
    basis, h_bf = brute_force_optimal_basis(prob, n_samples=10_000, n_probes=4000, seed=3)
    h_sym = path_conditional_entropy(prob)
    assert h_bf >= h_sym - 1e-9
    assert h_bf == pytest.approx(h_sym, abs=1e-9)


@settings(max_examples=60)
@given(alphas, angles, angles)
def test_erasing_ring_is_unbiased(alpha, beta, chi):
    prob = DiscriminationProblem.canonical(alpha, beta)
    s = symmetric_basis(prob).matrix
    e = erasing_basis(prob, chi).basis.matrix
    np.testing.assert_allclose(np.abs(e.conj().T @ s) ** 2, 0.5, atol=1e-10)


def test_erasing_ring_examples():
    prob = DiscriminationProblem.canonical(np.pi)
    e = erasing_basis(prob, 0.0)
    s1, s2 = eq9(np.pi)
    for v in (e.plus, e.minus):
        assert fidelity(v, s1) == pytest.approx(0.5, abs=1e-12)
        assert fidelity(v, s2) == pytest.approx(0.5, abs=1e-12)
    for chi in (0.0, 0.7, 2.5):
        a = erasing_basis(DiscriminationProblem.canonical(1.0), chi)
        b = erasing_basis(DiscriminationProblem.canonical(1.0), chi + np.pi)
        assert fidelity(a.plus, b.minus) == pytest.approx(1.0, abs=1e-12)
        assert fidelity(a.minus, b.plus) == pytest.approx(1.0, abs=1e-12)


def test_erasing_basis_for_qudits(rng):
    prob = DiscriminationProblem(random_state(rng, 4), random_state(rng, 4))
    sym = symmetric_basis(prob).matrix
    e = erasing_basis(prob, 1.3).basis.matrix
    np.testing.assert_allclose(np.abs(e[:, :2].conj().T @ sym[:, :2]) ** 2, 0.5, atol=1e-10)
    # the remaining vectors are the shared orthogonal complement
    np.testing.assert_allclose(e[:, 2:] @ e[:, 2:].conj().T, sym[:, 2:] @ sym[:, 2:].conj().T, atol=1e-10)


def test_canonical_pair_matches_phi_state_plane():
    for alpha in (0.2, 1.5, 3.0):
        cols = canonical_symmetric_pair(alpha)
        phi = phi_state(alpha).amplitudes
        assert abs(np.vdot(cols[:, 0], phi)) == pytest.approx(abs(np.vdot(cols[:, 1], [1, 0])))
