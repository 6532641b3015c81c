"""Quantum erasure of qudit-stored path information in two-path interferometers."""
from .cavity import (
    CavityParams,
    MichelsonSetup,
    conditional_phase_eta,
    energy_basis,
    michelson_joint_state,
    michelson_to_canonical,
    reflection_coefficient,
    reflection_phase,
)
from .discrimination import (
    DegenerateProblem,
    DiscriminationProblem,
    ErasingBasis,
    brute_force_optimal_basis,
    distinguishability,
    erasing_basis,
    guess_success_probability,
    path_conditional_entropy,
    symmetric_basis,
)
from .games import (
    GameReport,
    PhaseGameConfig,
    average_E,
    find_phi0_tilde,
    optimize_chi,
    play_games,
    play_path_game,
    play_phase_game,
    verify_erasure_identity,
)
from .info import OutcomeDistribution, conditional_entropy, shannon_entropy
from .interferometer import (
    SYMMETRIC_BS,
    BeamSplitterConvention,
    InteractionParams,
    JointState,
    apply_bs2,
    build_joint_state,
    detector_distribution,
    subensemble_visibility,
    visibility,
)
from .qstate import (
    BlochVector,
    ProjectiveBasis,
    PureState,
    bloch_rotation,
    born_probabilities,
    from_bloch,
    inner_product,
    ket,
    phi_state,
    to_bloch,
)

__version__ = "0.1.0"
