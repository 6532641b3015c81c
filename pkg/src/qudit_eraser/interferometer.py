"""Symmetric two-path interferometer with a pure-state ancilla in one arm.

Before the second beamsplitter the system is

    (|u> (x) phi1 + exp(i(phi + gamma)) |l> (x) phi2) / sqrt2

with, in qubit canonical mode, phi1 = |0> and
phi2 = cos(alpha/2)|0> + exp(i beta) sin(alpha/2)|1>.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .info import OutcomeDistribution
from .optimize import golden_section
from .qstate import NORM_TOL, ProjectiveBasis, PureState, ket, phi_state

TWO_PI = 2 * np.pi
EMPTY_TOL = 1e-14


@dataclass(frozen=True)
class InteractionParams:
    """Ancilla interaction (alpha, beta, gamma) plus the adjustable phase."""

    alpha: float
    beta: float = 1.5 * np.pi
    gamma: float = 0.0
    phase_phi: float = 0.0

    def __post_init__(self):
        if not -1e-12 <= self.alpha <= np.pi + 1e-12:
            raise ValueError(f"alpha must lie in [0, pi], got {self.alpha!r}")
        object.__setattr__(self, "alpha", float(np.clip(self.alpha, 0.0, np.pi)))
        object.__setattr__(self, "beta", float(np.mod(self.beta, TWO_PI)))
        object.__setattr__(self, "gamma", float(np.mod(self.gamma, TWO_PI)))
        object.__setattr__(self, "phase_phi", float(self.phase_phi))

    def with_phase(self, phase_phi: float) -> "InteractionParams":
        return replace(self, phase_phi=phase_phi)


@dataclass(frozen=True)
class BeamSplitterConvention:
    """2x2 unitary taking (upper, lower) path amplitudes to (D1, D2)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError("beamsplitter matrix must be 2x2")
        if not np.allclose(m.conj().T @ m, np.eye(2), rtol=0, atol=NORM_TOL):
            raise ValueError("beamsplitter matrix is not unitary")
        if not np.allclose(np.abs(m), 1 / np.sqrt(2), rtol=0, atol=NORM_TOL):
            raise ValueError("beamsplitter is not 50:50")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


# reflection picks up a factor i, transmission 1
SYMMETRIC_BS = BeamSplitterConvention(np.array([[1, 1j], [1j, 1]]) / np.sqrt(2))
# real 50:50 splitter with the sign flip on one reflection
HADAMARD_BS = BeamSplitterConvention(np.array([[1, 1], [1, -1]]) / np.sqrt(2))


@dataclass(frozen=True)
class JointState:
    """Path (x) ancilla amplitudes; rows are (upper, lower) or (D1, D2)."""

    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.array(self.amplitudes, dtype=complex)
        if a.ndim != 2 or a.shape[0] != 2:
            raise ValueError(f"joint amplitudes must be 2 x d, got {a.shape}")
        norm = float(np.sum(np.abs(a) ** 2))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"joint state is not normalized ({norm!r})")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    @property
    def ancilla_dim(self) -> int:
        return self.amplitudes.shape[1]


def ancilla_states(p: InteractionParams, phi1=None, phi2=None) -> tuple[PureState, PureState]:
    """(phi1, phi2) for the two arms; canonical qubit states when omitted."""
    if phi1 is None and phi2 is None:
        return ket(0), phi_state(p.alpha, p.beta)
    if phi1 is None or phi2 is None:
        raise ValueError("give both ancilla states or neither")
    phi1 = phi1 if isinstance(phi1, PureState) else PureState(phi1)
    phi2 = phi2 if isinstance(phi2, PureState) else PureState(phi2)
    if phi1.dim != phi2.dim:
        raise ValueError("ancilla states have different dimensions")
    return phi1, phi2


def build_joint_state(p: InteractionParams, ancilla_dim: int = 2, phi1=None, phi2=None) -> JointState:
    phi1, phi2 = ancilla_states(p, phi1, phi2)
    if phi1.dim != ancilla_dim:
        raise ValueError(f"ancilla states have dimension {phi1.dim}, expected {ancilla_dim}")
    lower = np.exp(1j * (p.phase_phi + p.gamma))
    return JointState(np.stack([phi1.amplitudes, lower * phi2.amplitudes]) / np.sqrt(2))


def apply_bs2(js: JointState, conv: BeamSplitterConvention = SYMMETRIC_BS) -> JointState:
    return JointState(conv.matrix @ js.amplitudes)


def detector_amplitudes(phi1, phi2, theta, conv: BeamSplitterConvention = SYMMETRIC_BS) -> np.ndarray:
    """Ancilla-conditioned detector amplitudes, vectorized over ``theta``.

    ``theta`` is the total lower-arm phase phi + gamma. The result has shape
    ``theta.shape + (2, d)``: [..., k, :] is the unnormalized ancilla state
    accompanying a click of detector k.
    """
    a1 = np.asarray(phi1, dtype=complex)
    a2 = np.asarray(phi2, dtype=complex)
    w = np.exp(1j * np.asarray(theta, dtype=float))[..., None, None]
    m = conv.matrix
    return (m[:, 0, None] * a1 + w * m[:, 1, None] * a2) / np.sqrt(2)


def detector_distribution(p: InteractionParams, phi1=None, phi2=None,
                          conv: BeamSplitterConvention = SYMMETRIC_BS) -> OutcomeDistribution:
    """P(D1), P(D2) with the ancilla traced out."""
    js = apply_bs2(build_joint_state(p, ancilla_states(p, phi1, phi2)[0].dim, phi1, phi2), conv)
    return OutcomeDistribution(np.sum(np.abs(js.amplitudes) ** 2, axis=1), axes=("D",))


def fringe(p: InteractionParams, phases, phi1=None, phi2=None,
           conv: BeamSplitterConvention = SYMMETRIC_BS) -> np.ndarray:
    """P(D1) as a function of the adjustable phase (vectorized)."""
    phi1, phi2 = ancilla_states(p, phi1, phi2)
    amp = detector_amplitudes(phi1, phi2, np.asarray(phases) + p.gamma, conv)
    return np.sum(np.abs(amp[..., 0, :]) ** 2, axis=-1)


def fringe_amplitude(p: InteractionParams, phi1=None, phi2=None) -> float:
    phi1, phi2 = ancilla_states(p, phi1, phi2)
    return abs(np.vdot(phi1.amplitudes, phi2.amplitudes))


def visibility(p: InteractionParams, phi1=None, phi2=None) -> float:
    """Fringe visibility; for a pure ancilla this is |<phi1|phi2>|."""
    return float(min(fringe_amplitude(p, phi1, phi2), 1.0))


def _contrast(f, n_points: int) -> float:
    phases = np.arange(n_points) * (TWO_PI / n_points)
    vals = f(phases)
    step = TWO_PI / n_points
    k_max, k_min = int(np.argmax(vals)), int(np.argmin(vals))
    scalar = lambda x: float(f(np.array([x]))[0])  # noqa: E731
    _, neg_max = golden_section(lambda x: -scalar(x), phases[k_max] - step, phases[k_max] + step)
    _, p_min = golden_section(scalar, phases[k_min] - step, phases[k_min] + step)
    p_max = max(-neg_max, vals[k_max])
    p_min = min(p_min, vals[k_min])
    if p_max + p_min <= 0:
        return 0.0
    return float((p_max - p_min) / (p_max + p_min))


def visibility_scan(p: InteractionParams, phi1=None, phi2=None, n_points: int = 720,
                    conv: BeamSplitterConvention = SYMMETRIC_BS) -> float:
    """Visibility from an explicit phase scan of P(D1) plus local refinement."""
    return _contrast(lambda ph: fringe(p, ph, phi1, phi2, conv), n_points)


def conditional_fringe(p: InteractionParams, basis: ProjectiveBasis, phases, phi1=None, phi2=None,
                       conv: BeamSplitterConvention = SYMMETRIC_BS):
    """P(D1 | m, phase) for every ancilla outcome m, plus P(m).

    Returns (cond, p_m) with ``cond`` of shape phases.shape + (d,); entries
    for outcomes with P(m) = 0 are NaN.
    """
    phi1, phi2 = ancilla_states(p, phi1, phi2)
    amp = detector_amplitudes(phi1, phi2, np.asarray(phases) + p.gamma, conv)
    joint = np.abs(amp @ basis.matrix.conj()) ** 2  # [..., D, m]
    p_m = 0.5 * (np.abs(basis.matrix.conj().T @ phi1.amplitudes) ** 2
                 + np.abs(basis.matrix.conj().T @ phi2.amplitudes) ** 2)
    with np.errstate(divide="ignore", invalid="ignore"):
        cond = np.where(p_m > EMPTY_TOL, joint[..., 0, :] / p_m, np.nan)
    return cond, p_m



def subensemble_visibility(p: InteractionParams, erasing_basis, phi1=None, phi2=None) -> tuple:
    """Visibility of the fringe sorted by each erasing outcome.

    Returns one entry per outcome of ``erasing_basis`` in basis order (the
    first two are V+ and V-); an outcome that never occurs yields ``None``.
    Uses the pure-ancilla closed form 2|a||b| / (|a|^2 + |b|^2) with
    a = <m|phi1>, b = <m|phi2>.
    """
    basis = getattr(erasing_basis, "basis", erasing_basis)
    phi1, phi2 = ancilla_states(p, phi1, phi2)
    a = np.abs(basis.matrix.conj().T @ phi1.amplitudes)
    b = np.abs(basis.matrix.conj().T @ phi2.amplitudes)
    out = []
    for am, bm in zip(a, b):
        norm = am * am + bm * bm
        out.append(None if norm / 2 <= EMPTY_TOL else float(2 * am * bm / norm))
    return tuple(out)


def subensemble_visibility_scan(p: InteractionParams, erasing_basis, phi1=None, phi2=None,
                                n_points: int = 720) -> tuple:
    """Scan-based counterpart of :func:`subensemble_visibility`."""
    basis = getattr(erasing_basis, "basis", erasing_basis)
    _, p_m = conditional_fringe(p, basis, np.zeros(1), phi1, phi2)
    out = []
    for m in range(basis.dim):
        if p_m[m] <= EMPTY_TOL:
            out.append(None)
            continue
        f = lambda ph, m=m: conditional_fringe(p, basis, ph, phi1, phi2)[0][..., m]  # noqa: E731
        out.append(_contrast(f, n_points))
    return tuple(out)
