"""
An atom in a cavity as the which-path marker
============================================

A photon reflected off a cavity holding a three-level atom picks up a phase
that depends on the atom's state. Put the cavity in one arm of a Michelson
interferometer and the atom records the path. Measuring its energy erases
the record.
"""
import numpy as np

from qudit_eraser import CavityParams, MichelsonSetup, conditional_phase_eta, reflection_coefficient
from qudit_eraser.cavity import energy_basis
from qudit_eraser.discrimination import DiscriminationProblem, erasing_basis
from qudit_eraser.games import verify_erasure_identity
from qudit_eraser.interferometer import subensemble_visibility, visibility
from qudit_eraser.qstate import bloch_axis_angle

kappa = 2 * np.pi * 5e6
for x in (0.0, 0.5, 2.0, 50.0):
    r = reflection_coefficient(x * kappa, kappa)
    print(f"Delta/kappa = {x:5.1f}: r = {r.real:+.4f}{r.imag:+.4f}i")

###############################################################################
# Photon on the bare resonance, dressed mode far away: eta close to pi.

f0 = 3.8e14
cp = CavityParams(f0, f0, f0 + 20 * kappa / (2 * np.pi), kappa)
print(f"eta = {conditional_phase_eta(cp):.4f} rad, strong detuning: {cp.strong_detuning}")

###############################################################################
# Scan eta. The entropy-optimal eraser stays on the atom's energy basis.

for eta in np.linspace(np.pi / 8, np.pi, 8):
    p = MichelsonSetup(eta).params
    chk = verify_erasure_identity(p, tie_break="continuous")
    eraser = erasing_basis(DiscriminationProblem.canonical(p.alpha, p.beta), chk.chi_star)
    vp, vm = subensemble_visibility(p, eraser)
    print(f"eta = {eta:.3f}  V = {visibility(p):.4f}  V+ = {vp:.4f}  V- = {vm:.4f}  "
          f"eraser vs energy basis = {bloch_axis_angle(eraser.basis, energy_basis()):.1e}")
