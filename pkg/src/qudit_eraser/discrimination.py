"""Optimal projective discrimination of two equiprobable pure states.

Every problem is reduced to a canonical qubit living in the plane spanned by
the two states: ``phi1 -> |0>`` and ``phi2 -> cos(a/2)|0> - i sin(a/2)|1>``
up to a global phase. In that frame the entropy-optimal basis is the pair of
vectors placed symmetrically about the two states, and the erasing bases are
the ring of qubit bases unbiased to it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space
from scipy.optimize import minimize
from scipy.stats import unitary_group

from .info import OutcomeDistribution, binary_entropy, entropy_bits
from .qstate import (
    DimensionMismatch,
    ProjectiveBasis,
    PureState,
    bloch_rotation,
    ket,
    phi_state,
)

DEGENERACY_TOL = 1e-10


class DegenerateProblem(ValueError):
    """The two hypothesis states are parallel, so no unique plane exists."""


@dataclass(frozen=True)
class DiscriminationProblem:
    """Guess which of ``phi1``/``phi2`` was prepared, each with prior 1/2."""

    phi1: PureState
    phi2: PureState

    priors = (0.5, 0.5)

    def __post_init__(self):
        for name in ("phi1", "phi2"):
            v = getattr(self, name)
            if not isinstance(v, PureState):
                object.__setattr__(self, name, PureState(v))
        if self.phi1.dim != self.phi2.dim:
            raise DimensionMismatch("hypothesis states have different dimensions")

    @classmethod
    def canonical(cls, alpha: float, beta: float = 1.5 * np.pi) -> "DiscriminationProblem":
        return cls(ket(0), phi_state(alpha, beta))

    @property
    def dim(self) -> int:
        return self.phi1.dim

    @property
    def overlap(self) -> complex:
        return complex(np.vdot(self.phi1.amplitudes, self.phi2.amplitudes))


@dataclass(frozen=True)
class PlaneFrame:
    """Isometry from the canonical qubit onto span{phi1, phi2}.

    ``phi1 = frame @ |0>`` and
    ``phi2 = exp(i phase) frame @ (cos(alpha/2), -i sin(alpha/2))``.
    """

    alpha: float
    phase: float
    frame: np.ndarray
    degenerate: bool = False

    def embed(self, qubit_vectors) -> np.ndarray:
        return self.frame @ np.asarray(qubit_vectors, dtype=complex)

    def complete(self, qubit_columns) -> np.ndarray:
        """Embed 2 qubit columns and append an orthonormal complement."""
        cols = self.embed(qubit_columns)
        d = self.frame.shape[0]
        if d == 2:
            return cols
        return np.hstack([cols, null_space(self.frame.conj().T)])


def plane_frame(prob: DiscriminationProblem) -> PlaneFrame:
    """Frame with phi1 as first column and phi2 in canonical position.

    For qubits the second column is the exact orthogonal complement of phi1,
    so nearly parallel states keep their true (tiny) alpha. For d > 2 the
    second direction comes from re-orthogonalized Gram-Schmidt and overlaps
    above 1 - 1e-10 are rejected as degenerate.
    """
    b0 = prob.phi1.amplitudes.copy()
    v = prob.phi2.amplitudes
    c = np.vdot(b0, v)
    omega = float(np.angle(c)) if abs(c) > 0 else 0.0
    if prob.dim == 2:
        b1 = np.array([-np.conj(b0[1]), np.conj(b0[0])])
        t = np.vdot(b1, v)
        degenerate = abs(t) == 0
    else:
        if abs(c) > 1 - DEGENERACY_TOL:
            raise DegenerateProblem("hypothesis states are parallel; plane undefined")
        r = v - c * b0
        r = r - np.vdot(b0, r) * b0
        b1 = r / np.linalg.norm(r)
        t = np.vdot(b1, v)
        degenerate = False
    alpha = 2 * np.arctan2(abs(t), abs(c))
    if not degenerate:
        # the phase of the complement is free when phi2 has no component along it
        b1 = 1j * np.exp(-1j * omega) * np.exp(1j * np.angle(t)) * b1
    return PlaneFrame(float(alpha), omega, np.column_stack([b0, b1]), bool(degenerate))


def canonical_symmetric_pair(alpha: float) -> np.ndarray:
    """Columns s1, s2 of the symmetric basis for |0> and phi(alpha, 3pi/2)."""
    a, b = (np.pi + alpha) / 4, (np.pi - alpha) / 4
    return np.array([[np.cos(a), np.cos(b)], [-1j * np.sin(a), 1j * np.sin(b)]])


def canonical_erasing_pair(alpha: float, chi: float) -> np.ndarray:
    """Columns e+, e-: the chi-ring unbiased to |0>,|1> turned onto the s-axis."""
    w = np.exp(1j * np.asarray(chi, dtype=float))[..., None]
    ring = np.stack([np.ones_like(w) * [1, 1], w * [1, -1]], axis=-2) / np.sqrt(2)
    return bloch_rotation("x", -(np.pi - alpha) / 2) @ ring


def symmetric_basis(prob: DiscriminationProblem) -> ProjectiveBasis:
    """Entropy-optimal measurement: two vectors in the states' plane, symmetric
    about them, completed by any orthonormal complement."""
    fr = plane_frame(prob)
    return ProjectiveBasis(fr.complete(canonical_symmetric_pair(fr.alpha)))


@dataclass(frozen=True)
class ErasingBasis:
    chi: float
    basis: ProjectiveBasis

    @property
    def plus(self) -> PureState:
        return self.basis[0]

    @property
    def minus(self) -> PureState:
        return self.basis[1]


def erasing_basis(prob: DiscriminationProblem, chi: float) -> ErasingBasis:
    fr = plane_frame(prob)
    return ErasingBasis(float(chi), ProjectiveBasis(fr.complete(canonical_erasing_pair(fr.alpha, chi))))


def path_distribution(prob: DiscriminationProblem, basis: ProjectiveBasis | None = None) -> OutcomeDistribution:
    """Joint table over (P, M); P=0 means phi1 was prepared."""
    basis = symmetric_basis(prob) if basis is None else basis
    if basis.dim != prob.dim:
        raise DimensionMismatch("basis and states have different dimensions")
    states = np.stack([prob.phi1.amplitudes, prob.phi2.amplitudes])
    cond = np.abs(states.conj() @ basis.matrix) ** 2
    return OutcomeDistribution(0.5 * cond, axes=("P", "M"))


def guess_success_probability(prob: DiscriminationProblem, basis: ProjectiveBasis | None = None) -> float:
    """Average chance of naming the prepared state from the outcome."""
    joint = path_distribution(prob, basis).probs
    return float(joint.max(axis=0).sum())


def distinguishability(prob: DiscriminationProblem, basis: ProjectiveBasis | None = None) -> float:
    return 2 * guess_success_probability(prob, basis) - 1


def path_conditional_entropy(prob: DiscriminationProblem, basis: ProjectiveBasis | None = None) -> float:
    """H(P|M) in bits; the symmetric basis is used when none is given."""
    return path_distribution(prob, basis).conditional_entropy(["P"], ["M"])


def path_mutual_information(prob: DiscriminationProblem, basis: ProjectiveBasis | None = None) -> float:
    return 1.0 - path_conditional_entropy(prob, basis)


def optimal_path_entropy(alpha) -> np.ndarray:
    """Closed form of H(P|M_s) for states with overlap modulus cos(alpha/2)."""
    return binary_entropy((1 + np.sin(np.asarray(alpha) / 2)) / 2)


# -- brute-force oracle ------------------------------------------------------

def fibonacci_sphere(n: int) -> np.ndarray:
    k = np.arange(n) + 0.5
    z = 1 - 2 * k / n
    rho = np.sqrt(1 - z * z)
    az = np.pi * (3 - np.sqrt(5)) * k
    return np.column_stack([rho * np.cos(az), rho * np.sin(az), z])


def _bloch_of(v) -> np.ndarray:
    a, b = v
    cross = np.conj(a) * b
    return np.array([2 * cross.real, 2 * cross.imag, abs(a) ** 2 - abs(b) ** 2])


def _axis_entropy(axes: np.ndarray, r1: np.ndarray, r2: np.ndarray) -> np.ndarray:
    """H(P|M) for measuring along Bloch axes n (rows), outcomes +n and -n."""
    c1, c2 = axes @ r1, axes @ r2
    joint = 0.25 * np.stack([1 + c1, 1 - c1, 1 + c2, 1 - c2], axis=-1)
    pm = np.stack([joint[:, 0] + joint[:, 2], joint[:, 1] + joint[:, 3]], axis=-1)
    return entropy_bits(joint, axis=-1) - entropy_bits(pm, axis=-1)


def _spherical(t):
    th, az = t
    return np.array([np.sin(th) * np.cos(az), np.sin(th) * np.sin(az), np.cos(th)])


def _axis_basis(n: np.ndarray) -> np.ndarray:
    th = np.arccos(np.clip(n[2], -1, 1))
    az = np.arctan2(n[1], n[0])
    up = np.array([np.cos(th / 2), np.exp(1j * az) * np.sin(th / 2)])
    down = np.array([-np.exp(-1j * az) * np.sin(th / 2), np.cos(th / 2)])
    return np.column_stack([up, down])


def _basis_entropies(states: np.ndarray, unitaries: np.ndarray) -> np.ndarray:
    """H(P|M) for each basis ``unitaries[j]`` (columns are kets)."""
    amp = np.einsum("kd,jdm->jkm", states.conj(), unitaries)
    joint = 0.5 * np.abs(amp) ** 2
    return entropy_bits(joint.reshape(len(unitaries), -1), axis=-1) - entropy_bits(joint.sum(axis=1), axis=-1)


def brute_force_optimal_basis(
    prob: DiscriminationProblem,
    n_samples: int = 10_000,
    n_refine: int = 10,
    n_probes: int = 2_000,
    seed: int = 0,
):
    """Search for the basis minimizing H(P|M) without assuming its form.

    In-plane candidates come from a Fibonacci grid of Bloch axes over an
    independently orthonormalized span, refined by Nelder-Mead on the best
    ``n_refine``. For d > 2, ``n_probes`` full-dimensional bases (Haar-random
    and small perturbations of the in-plane winner) try to beat it.
    Returns (ProjectiveBasis, H_min).
    """
    if n_samples < 100:
        raise ValueError("n_samples must be at least 100")
    states = np.stack([prob.phi1.amplitudes, prob.phi2.amplitudes])
    d = prob.dim
    if d == 2:
        q = np.eye(2, dtype=complex)
    else:
        q, _ = np.linalg.qr(states.T)
        if np.linalg.matrix_rank(states, tol=DEGENERACY_TOL) < 2:
            q = q[:, :1]
            q = np.hstack([q, null_space(q.conj().T)[:, :1]])
    coords = states @ q.conj()
    r1, r2 = _bloch_of(coords[0]), _bloch_of(coords[1])

    axes = fibonacci_sphere(n_samples)
    h = _axis_entropy(axes, r1, r2)
    best_axis, best_h = axes[int(np.argmin(h))], float(h.min())
    for idx in np.argsort(h, kind="stable")[:n_refine]:
        n0 = axes[idx]
        t0 = np.array([np.arccos(np.clip(n0[2], -1, 1)), np.arctan2(n0[1], n0[0])])
        res = minimize(
            lambda t: float(_axis_entropy(_spherical(t)[None], r1, r2)[0]),
            t0,
            method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-15, "maxiter": 4000},
        )
        if res.fun < best_h:
            best_h, best_axis = float(res.fun), _spherical(res.x)

    cols = q @ _axis_basis(best_axis)
    best = cols if d == 2 else np.hstack([cols, null_space(q.conj().T)])

    if d > 2 and n_probes > 0:
        rng = np.random.default_rng(seed)
        haar = unitary_group.rvs(d, size=n_probes // 2, random_state=rng).reshape(-1, d, d)
        kicks = []
        for eps in np.geomspace(1e-4, 1e-1, n_probes - len(haar)):
            g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
            herm = (g + g.conj().T) / 2
            w, v = np.linalg.eigh(herm)
            kicks.append(best @ (v * np.exp(1j * eps * w)) @ v.conj().T)
        probes = np.concatenate([haar, np.array(kicks)]) if kicks else haar
        hp = _basis_entropies(states, probes)
        j = int(np.argmin(hp))
        if hp[j] < best_h:
            best_h, best = float(hp[j]), probes[j]

    return ProjectiveBasis(best), float(best_h)
