"""Path- and phase-guessing games and the entropic erasure identity.

Path game: one arm is blocked at random and the surviving path is guessed
from an ancilla measurement in the symmetric basis M_s.

Phase game: one of {phi0, phi0 + pi} is applied at random and guessed from
the detector click D, optionally helped by an ancilla measurement M_e in an
erasing basis labelled by chi.

All entropies are in bits.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .discrimination import (
    DiscriminationProblem,
    canonical_erasing_pair,
    erasing_basis,
    path_distribution,
    plane_frame,
    symmetric_basis,
)
from .info import OutcomeDistribution, conditional_entropy, entropy_bits, shannon_entropy
from .interferometer import (
    SYMMETRIC_BS,
    BeamSplitterConvention,
    InteractionParams,
    ancilla_states,
    detector_amplitudes,
    fringe_amplitude,
)
from .optimize import periodic_minimize

PHI0_GRID = 1024
CHI_GRID = 512
FLAT_FRINGE_TOL = 1e-12

__all__ = [
    "GameReport",
    "PhaseGameConfig",
    "PhaseGameResult",
    "PathGameResult",
    "ErasureCheck",
    "AverageE",
    "shannon_entropy",
    "conditional_entropy",
    "phase_game_distribution",
    "play_path_game",
    "play_phase_game",
    "balanced_phase",
    "find_phi0_tilde",
    "optimize_chi",
    "verify_erasure_identity",
    "average_E",
    "play_games",
]


# -- vectorized tables --------------------------------------------------------

def _phase_amplitudes(phi1, phi2, gamma, phi0, conv=SYMMETRIC_BS):
    """Detector/ancilla amplitudes, shape phi0.shape + (Phi=2, D=2, d)."""
    theta = np.asarray(phi0, dtype=float)[..., None] + gamma + np.array([0.0, np.pi])
    return detector_amplitudes(phi1, phi2, theta, conv)


def _h_phase_given_d(phi1, phi2, gamma, phi0, conv=SYMMETRIC_BS):
    amp = _phase_amplitudes(phi1, phi2, gamma, phi0, conv)
    joint = 0.5 * np.sum(np.abs(amp) ** 2, axis=-1)  # [..., Phi, D]
    flat = joint.reshape(joint.shape[:-2] + (4,))
    return entropy_bits(flat, axis=-1) - entropy_bits(joint.sum(axis=-2), axis=-1)


def _h_phase_given_d_m(joint):
    """H(Phi|D,M) for tables [..., Phi, D, M]."""
    lead = joint.shape[:-3]
    return (entropy_bits(joint.reshape(lead + (-1,)), axis=-1)
            - entropy_bits(joint.sum(axis=-3).reshape(lead + (-1,)), axis=-1))


def _erasing_matrices(prob: DiscriminationProblem, chis) -> np.ndarray:
    """Erasing bases for an array of chi values, shape chis.shape + (d, d)."""
    fr = plane_frame(prob)
    cols = fr.frame @ canonical_erasing_pair(fr.alpha, chis)
    if prob.dim == 2:
        return cols
    rest = fr.complete(np.eye(2))[:, 2:]
    return np.concatenate([cols, np.broadcast_to(rest, cols.shape[:-1] + rest.shape[-1:])], axis=-1)


def _joint_for_bases(phi1, phi2, gamma, phi0, bases, conv=SYMMETRIC_BS):
    """P(Phi, D, M) for one phi0 and a stack of bases [..., d, d]."""
    amp = _phase_amplitudes(phi1, phi2, gamma, phi0, conv)  # (2, 2, d)
    return 0.5 * np.abs(np.einsum("pkj,...jm->...pkm", amp, bases.conj())) ** 2


# -- public types -------------------------------------------------------------

@dataclass(frozen=True)
class PhaseGameConfig:
    """Phase game for hypotheses {phi0, phi0 + pi}.

    ``chi=None`` asks for the entropy-optimal erasing basis. ``ancilla``
    optionally replaces the canonical qubit states by a (phi1, phi2) pair.
    """

    params: InteractionParams
    phi0: float
    chi: float | None = None
    ancilla: tuple | None = None


@dataclass(frozen=True)
class PhaseGameResult:
    H_phi_given_D: float
    H_phi_given_D_Me: float
    E: float
    chi: float


@dataclass(frozen=True)
class PathGameResult:
    H_path_given_Ms: float
    I_path_Ms: float
    D: float
    detector_uninformative: bool


@dataclass(frozen=True)
class GameReport:
    H_phi_given_D: float
    H_phi_given_D_Me: float
    E: float
    H_path_given_Ms: float
    I_path_Ms: float
    phi0_tilde: float
    chi_star: float

    def __post_init__(self):
        for name in ("H_phi_given_D", "H_phi_given_D_Me", "H_path_given_Ms", "I_path_Ms"):
            v = getattr(self, name)
            if not -1e-12 <= v <= 1 + 1e-12:
                raise ValueError(f"{name}={v!r} outside [0, 1]")
        if self.E < -1e-12:
            raise ValueError(f"negative erasure gain E={self.E!r}")


@dataclass(frozen=True)
class ErasureCheck:
    phase_gain: float       # max_chi {H(Phi~|D) - H(Phi~|D,M_e)}
    path_information: float  # I(P:M_s)
    residual: float
    passed: bool
    phi0_tilde: float
    chi_star: float
    H_phi_given_D: float
    min_H_phi_given_D_Me: float
    H_path_given_Ms: float


@dataclass(frozen=True)
class AverageE:
    value: float
    refined: float
    converged: bool


# -- games ------------------------------------------------------------------

def _problem(params, phi1, phi2):
    a1, a2 = ancilla_states(params, phi1, phi2)
    return a1, a2, DiscriminationProblem(a1, a2)


def phase_game_distribution(params: InteractionParams, phi0: float, chi: float,
                            phi1=None, phi2=None) -> OutcomeDistribution:
    a1, a2, prob = _problem(params, phi1, phi2)
    basis = erasing_basis(prob, chi).basis.matrix
    joint = _joint_for_bases(a1.amplitudes, a2.amplitudes, params.gamma, phi0, basis)
    return OutcomeDistribution(joint, axes=("Phi", "D", "M"))


def play_path_game(params: InteractionParams, phi1=None, phi2=None) -> PathGameResult:
    a1, a2, prob = _problem(params, phi1, phi2)
    joint = path_distribution(prob, symmetric_basis(prob))
    h = joint.conditional_entropy(["P"], ["M"])
    dist = 2 * float(joint.probs.max(axis=0).sum()) - 1
    # one arm only: which detector fires is independent of the surviving arm
    clicks = np.array([
        np.abs(SYMMETRIC_BS.matrix[:, 0]) ** 2,
        np.abs(SYMMETRIC_BS.matrix[:, 1]) ** 2,
    ])
    return PathGameResult(h, 1.0 - h, dist, bool(np.allclose(clicks[0], clicks[1], atol=1e-12)))


def play_phase_game(cfg: PhaseGameConfig) -> PhaseGameResult:
    phi1, phi2 = cfg.ancilla or (None, None)
    if cfg.chi is None:
        chi, h_dm = optimize_chi(cfg.params, cfg.phi0, phi1, phi2)
    else:
        chi = float(cfg.chi)
        h_dm = phase_game_distribution(cfg.params, cfg.phi0, chi, phi1, phi2).conditional_entropy(
            ["Phi"], ["D", "M"])
    a1, a2 = ancilla_states(cfg.params, phi1, phi2)
    h_d = float(_h_phase_given_d(a1.amplitudes, a2.amplitudes, cfg.params.gamma, cfg.phi0))
    return PhaseGameResult(h_d, h_dm, h_d - h_dm, chi)


def balanced_phase(params: InteractionParams, phi1=None, phi2=None,
                   conv: BeamSplitterConvention = SYMMETRIC_BS) -> float:
    """Closed-form phi0 in [0, pi) where P(D1|phi0) = 1/2.

    P(D1) = 1/2 + Re(conj(M00) M01 exp(i(phi0 + gamma)) <phi1|phi2>), so the
    balanced point is pi/2 - arg(conj(M00) M01) - gamma - arg<phi1|phi2>
    (mod pi). For orthogonal ancilla states the overlap phase is taken from
    the plane frame, which makes this the continuous limit of a vanishing
    fringe.
    """
    a1, a2, prob = _problem(params, phi1, phi2)
    m = conv.matrix
    x = np.pi / 2 - np.angle(np.conj(m[0, 0]) * m[0, 1]) - params.gamma - plane_frame(prob).phase
    x = float(np.mod(x, np.pi))
    return 0.0 if x >= np.pi else x


def find_phi0_tilde(params: InteractionParams, phi1=None, phi2=None,
                    conv: BeamSplitterConvention = SYMMETRIC_BS,
                    tie_break: str = "smallest") -> float:
    """phi0 in [0, pi) maximizing H(Phi|D), by grid scan and golden section.

    When the fringe is flat every phi0 is a maximizer; ``tie_break``
    "smallest" then returns 0, "continuous" returns :func:`balanced_phase`.
    The value depends on the beamsplitter phase convention ``conv``.
    """
    if tie_break not in ("smallest", "continuous"):
        raise ValueError(f"unknown tie_break {tie_break!r}")
    a1, a2 = ancilla_states(params, phi1, phi2)
    if fringe_amplitude(params, a1, a2) < FLAT_FRINGE_TOL:
        return 0.0 if tie_break == "smallest" else balanced_phase(params, a1, a2, conv)
    v1, v2, g = a1.amplitudes, a2.amplitudes, params.gamma

    def imbalance(x):
        # H(Phi|D) = h2(P(D1|phi0)) peaks exactly where P(D1|phi0) = 1/2; the
        # imbalance stays resolvable when h2 is within rounding of 1
        amp = detector_amplitudes(v1, v2, np.asarray(x) + g, conv)
        return np.abs(np.sum(np.abs(amp[..., 0, :]) ** 2, axis=-1) - 0.5)

    x, _ = periodic_minimize(imbalance, np.pi, PHI0_GRID, lambda t: float(imbalance(t)))
    return x


def optimize_chi(params: InteractionParams, phi0: float, phi1=None, phi2=None,
                 conv: BeamSplitterConvention = SYMMETRIC_BS):
    """(chi*, min_chi H(Phi|D,M_e)) over the erasing ring, chi in [0, pi)."""
    a1, a2, prob = _problem(params, phi1, phi2)
    v1, v2, g = a1.amplitudes, a2.amplitudes, params.gamma

    def h(chis):
        return _h_phase_given_d_m(_joint_for_bases(v1, v2, g, phi0, _erasing_matrices(prob, chis), conv))

    return periodic_minimize(h, np.pi, CHI_GRID)


def verify_erasure_identity(params: InteractionParams, tol: float = 1e-6,
                            phi1=None, phi2=None,
                            conv: BeamSplitterConvention = SYMMETRIC_BS,
                            tie_break: str = "smallest") -> ErasureCheck:
    """Compare the best erasure gain in the phase game with I(P:M_s)."""
    a1, a2 = ancilla_states(params, phi1, phi2)
    phi0 = find_phi0_tilde(params, a1, a2, conv, tie_break)
    h_d = float(_h_phase_given_d(a1.amplitudes, a2.amplitudes, params.gamma, phi0, conv))
    chi, h_min = optimize_chi(params, phi0, a1, a2, conv)
    path = play_path_game(params, a1, a2)
    gain = h_d - h_min
    residual = abs(gain - path.I_path_Ms)
    return ErasureCheck(gain, path.I_path_Ms, residual, residual <= tol, phi0, chi,
                        h_d, h_min, path.H_path_given_Ms)


def erasure_gain(params: InteractionParams, phi0s, chi: float, phi1=None, phi2=None) -> np.ndarray:
    """E(phi0, chi) = H(Phi|D) - H(Phi|D,M_e), vectorized over ``phi0s``."""
    a1, a2, prob = _problem(params, phi1, phi2)
    v1, v2, g = a1.amplitudes, a2.amplitudes, params.gamma
    basis = _erasing_matrices(prob, chi)
    amp = _phase_amplitudes(v1, v2, g, np.asarray(phi0s, dtype=float))
    joint = 0.5 * np.abs(amp @ basis.conj()) ** 2
    return _h_phase_given_d(v1, v2, g, phi0s) - _h_phase_given_d_m(joint)


def average_E(params: InteractionParams, chi: float, n_panels: int = 2048,
              phi1=None, phi2=None) -> AverageE:
    """Mean of E over phi0 in [0, pi] by composite Simpson.

    ``refined`` repeats the integral with twice the panels; ``converged``
    means the two agree to 1e-9.
    """
    if n_panels < 64 or n_panels % 2:
        raise ValueError("n_panels must be even and at least 64")

    def integrate(n):
        x = np.linspace(0.0, np.pi, n + 1)
        return float(simpson(erasure_gain(params, x, chi, phi1, phi2), x=x) / np.pi)

    value, refined = integrate(n_panels), integrate(2 * n_panels)
    return AverageE(value, refined, abs(value - refined) < 1e-9)


def play_games(params: InteractionParams, phi1=None, phi2=None) -> GameReport:
    chk = verify_erasure_identity(params, phi1=phi1, phi2=phi2)
    return GameReport(
        H_phi_given_D=chk.H_phi_given_D,
        H_phi_given_D_Me=chk.min_H_phi_given_D_Me,
        E=chk.phase_gain,
        H_path_given_Ms=chk.H_path_given_Ms,
        I_path_Ms=chk.path_information,
        phi0_tilde=chk.phi0_tilde,
        chi_star=chk.chi_star,
    )
