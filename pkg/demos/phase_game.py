"""
Erasing path information to learn about phase
=============================================

Alice picks phase phi0 or phi0 + pi. Bob sees which detector clicked and
then measures the ancilla in a basis from the erasing ring. The extra
information about the phase he gains this way equals what the best path
measurement would have told him about the path.
"""
import numpy as np

from qudit_eraser import InteractionParams, PhaseGameConfig, play_phase_game, verify_erasure_identity
from qudit_eraser.games import average_E, erasure_gain, find_phi0_tilde

p = InteractionParams(alpha=0.75 * np.pi, beta=1.5 * np.pi, gamma=0.5 * np.pi)
phi0 = find_phi0_tilde(p)
print(f"balanced phase phi0~ = {phi0:.6f}")

for chi in np.linspace(0, np.pi, 5):
    res = play_phase_game(PhaseGameConfig(p, phi0, chi))
    print(f"  chi = {chi:.3f}  H(Phi|D) = {res.H_phi_given_D:.6f}  E = {res.E:.6f}")

chk = verify_erasure_identity(p)
print(f"best gain {chk.phase_gain:.9f} vs I(P:Ms) {chk.path_information:.9f}")

###############################################################################
# Away from phi0~ the gain drops. Averaged over phi0 it no longer depends on
# which ring basis was used.

phis = np.linspace(0, np.pi, 7)
print("E over phi0:", np.round(erasure_gain(p, phis, 0.0), 4))
for chi in (0.0, 1.0, 2.0):
    print(f"  average over phi0 at chi = {chi}: {average_E(p, chi).value:.7f}")
