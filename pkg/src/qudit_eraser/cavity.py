"""Atom-cavity reflection and the modified Michelson interferometer.

The three-level atom {g0, g1, e} sits in a one-sided cavity. With the atom in
g0 the photon sees the bare cavity; with the atom in span{g1, e} it sees the
dressed modes. Ancilla coordinates use u+ = (g1 + g0)/sqrt2 as |0> and
u- = (g1 - g0)/sqrt2 as |1>.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .interferometer import InteractionParams, JointState
from .qstate import ProjectiveBasis, PureState

STRONG_DETUNING_RATIO = 10.0

G0 = np.array([1, -1], dtype=complex) / np.sqrt(2)
G1 = np.array([1, 1], dtype=complex) / np.sqrt(2)


def wrap_phase(x):
    """Map angles into (-pi, pi]."""
    return np.pi - np.mod(np.pi - np.asarray(x, dtype=float), 2 * np.pi)


def reflection_coefficient(delta, kappa):
    """Input-output reflection (i delta - kappa/2) / (i delta + kappa/2)."""
    if np.any(np.asarray(kappa) <= 0):
        raise ValueError("cavity decay rate kappa must be positive")
    d = np.asarray(delta, dtype=float)
    return (1j * d - kappa / 2) / (1j * d + kappa / 2)


def reflection_phase(delta, kappa):
    """arg of the reflection coefficient in (-pi, pi], exact pi on resonance."""
    if np.any(np.asarray(kappa) <= 0):
        raise ValueError("cavity decay rate kappa must be positive")
    return wrap_phase(np.pi - 2 * np.arctan2(2 * np.asarray(delta, dtype=float), kappa))


@dataclass(frozen=True)
class CavityParams:
    """Frequencies in Hz, decay rate in rad/s."""

    f0: float
    f_uncoupled: float
    f_coupled: float
    kappa: float

    def __post_init__(self):
        if not self.kappa > 0:
            raise ValueError("kappa must be positive")

    @property
    def delta_uncoupled(self) -> float:
        return 2 * np.pi * (self.f_uncoupled - self.f0)

    @property
    def delta_coupled(self) -> float:
        return 2 * np.pi * (self.f_coupled - self.f0)

    @property
    def strong_detuning(self) -> bool:
        return abs(self.delta_coupled) / self.kappa >= STRONG_DETUNING_RATIO


def conditional_phase_eta(cp: CavityParams) -> float:
    """Extra reflection phase picked up when the atom is in g0 rather than g1."""
    eta = reflection_phase(cp.delta_uncoupled, cp.kappa) - reflection_phase(cp.delta_coupled, cp.kappa)
    return float(wrap_phase(eta))


def atom_state_after_reflection(cp: CavityParams) -> PureState:
    """Atom state, prepared in u+, after reflecting the photon (u+/u- coordinates)."""
    r_u = reflection_coefficient(cp.delta_uncoupled, cp.kappa)
    r_c = reflection_coefficient(cp.delta_coupled, cp.kappa)
    return PureState.normalized((r_c * G1 + r_u * G0) / np.sqrt(2))


def reflected_atom_state(eta: float) -> PureState:
    """(g1 + exp(i eta) g0)/sqrt2 in u+/u- coordinates."""
    return PureState((G1 + np.exp(1j * eta) * G0) / np.sqrt(2))


def energy_basis() -> ProjectiveBasis:
    """{g0, g1} expressed in u+/u- coordinates."""
    return ProjectiveBasis(np.column_stack([G0, G1]))


def _check_eta(eta: float) -> None:
    if not 0 < eta <= np.pi + 1e-12:
        raise ValueError(f"eta must lie in (0, pi], got {eta!r}")


def michelson_to_canonical(eta: float) -> InteractionParams:
    _check_eta(eta)
    return InteractionParams(alpha=min(eta, np.pi), beta=1.5 * np.pi, gamma=eta / 2)


def michelson_joint_state(eta: float, phase_phi: float = 0.0) -> JointState:
    """State just before the photon re-enters the beamsplitter.

    Row 0 is the vertical arm (atom untouched in u+), row 1 the horizontal
    arm carrying the adjustable phase.
    """
    _check_eta(eta)
    u_plus = np.array([1, 0], dtype=complex)
    u = reflected_atom_state(eta).amplitudes
    return JointState(np.stack([u_plus, np.exp(1j * phase_phi) * u]) / np.sqrt(2))


@dataclass(frozen=True)
class MichelsonSetup:
    eta: float

    def __post_init__(self):
        _check_eta(self.eta)

    @classmethod
    def from_cavity(cls, cp: CavityParams) -> "MichelsonSetup":
        # a negative conditional phase is the mirror image; keep its magnitude
        return cls(abs(conditional_phase_eta(cp)))

    @property
    def params(self) -> InteractionParams:
        return michelson_to_canonical(self.eta)
