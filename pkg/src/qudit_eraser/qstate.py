"""Pure-state algebra: kets, projective bases, Bloch coordinates, Born rule.

Bloch convention: |0> sits at +z, (|0>+|1>)/sqrt2 at +x and (|0>+i|1>)/sqrt2
at +y. Rotations are ``exp(-i angle sigma/2)`` and turn Bloch vectors by
``angle`` about their axis (right-hand rule).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .info import OutcomeDistribution

NORM_TOL = 1e-12
ORTHO_TOL = 1e-10

PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class PureState:
    """Normalized complex amplitude vector of dimension d >= 2."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amp.size < 2:
            raise ValueError("a pure state needs dimension >= 2")
        norm = np.vdot(amp, amp).real
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized (|psi|^2 = {norm!r})")
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)

    @classmethod
    def normalized(cls, amplitudes) -> "PureState":
        amp = np.asarray(amplitudes, dtype=complex).reshape(-1)
        return cls(amp / np.linalg.norm(amp))

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.amplitudes, dtype=dtype)

    def evolve(self, unitary) -> "PureState":
        return PureState(np.asarray(unitary) @ self.amplitudes)


@dataclass(frozen=True)
class ProjectiveBasis:
    """Orthonormal basis; ``matrix[:, k]`` is the k-th basis ket."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 2:
            raise ValueError(f"basis matrix must be square d x d, got {m.shape}")
        gram = m.conj().T @ m
        if not np.allclose(gram, np.eye(m.shape[0]), rtol=0, atol=ORTHO_TOL):
            raise ValueError("basis vectors are not orthonormal")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_vectors(cls, vectors: Sequence) -> "ProjectiveBasis":
        return cls(np.column_stack([np.asarray(v, dtype=complex) for v in vectors]))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def vectors(self) -> list[PureState]:
        return [PureState(self.matrix[:, k]) for k in range(self.dim)]

    def __len__(self):
        return self.dim

    def __getitem__(self, k) -> PureState:
        return PureState(self.matrix[:, k])


@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    def __array__(self, dtype=None, copy=None):
        return np.array([self.x, self.y, self.z], dtype=dtype)

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.x**2 + self.y**2 + self.z**2))


def ket(index: int, dim: int = 2) -> PureState:
    amp = np.zeros(dim, dtype=complex)
    amp[index] = 1.0
    return PureState(amp)


def computational_basis(dim: int = 2) -> ProjectiveBasis:
    return ProjectiveBasis(np.eye(dim, dtype=complex))


def phi_state(alpha: float, beta: float = 1.5 * np.pi) -> PureState:
    """cos(alpha/2)|0> + exp(i beta) sin(alpha/2)|1>."""
    return PureState([np.cos(alpha / 2), np.exp(1j * beta) * np.sin(alpha / 2)])


def _amps(s) -> np.ndarray:
    return np.asarray(s, dtype=complex).reshape(-1)


def inner_product(a, b) -> complex:
    """<a|b>, conjugating the first argument."""
    va, vb = _amps(a), _amps(b)
    if va.size != vb.size:
        raise DimensionMismatch(f"dimensions differ: {va.size} vs {vb.size}")
    return complex(np.vdot(va, vb))


def fidelity(a, b) -> float:
    """|<a|b>|^2; the only phase-blind way states are compared here."""
    return abs(inner_product(a, b)) ** 2


def bloch_rotation(axis: str, angle: float) -> np.ndarray:
    """SU(2) matrix exp(-i angle sigma_axis / 2)."""
    try:
        sigma = PAULI[axis.lower()]
    except KeyError:
        raise ValueError(f"axis must be one of x, y, z; got {axis!r}") from None
    return np.cos(angle / 2) * np.eye(2) - 1j * np.sin(angle / 2) * sigma


def to_bloch(s) -> BlochVector:
    amp = _amps(s)
    if amp.size != 2:
        raise DimensionMismatch("Bloch coordinates need a qubit")
    a, b = amp
    cross = np.conj(a) * b
    return BlochVector(
        float(2 * cross.real), float(2 * cross.imag), float(abs(a) ** 2 - abs(b) ** 2)
    )


def from_bloch(v) -> PureState:
    x, y, z = np.asarray(v, dtype=float)
    r = np.sqrt(x * x + y * y + z * z)
    if abs(r - 1.0) > ORTHO_TOL:
        raise ValueError(f"Bloch vector must have unit length, got {r!r}")
    theta = np.arccos(np.clip(z / r, -1.0, 1.0))
    azimuth = np.arctan2(y, x)
    return PureState([np.cos(theta / 2), np.exp(1j * azimuth) * np.sin(theta / 2)])


def bloch_axis_angle(basis_a: ProjectiveBasis, basis_b: ProjectiveBasis) -> float:
    """Angle between the Bloch axes of two qubit bases, ignoring orientation.

    Both {|e+>, |e->} and {|e->, |e+>} describe the same measurement, so
    the result lies in [0, pi/2].
    """
    na = np.asarray(to_bloch(basis_a.matrix[:, 0]))
    nb = np.asarray(to_bloch(basis_b.matrix[:, 0]))
    return float(np.arccos(np.clip(abs(na @ nb), 0.0, 1.0)))


def born_probabilities(s, basis: ProjectiveBasis) -> OutcomeDistribution:
    amp = _amps(s)
    if amp.size != basis.dim:
        raise DimensionMismatch(f"state has dimension {amp.size}, basis {basis.dim}")
    p = np.abs(basis.matrix.conj().T @ amp) ** 2
    return OutcomeDistribution(p, axes=("M",))
