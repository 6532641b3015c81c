"""
Visibility versus path distinguishability
=========================================

An ancilla in the lower arm is rotated by alpha. The fringe washes out as
the two ancilla states separate, and the which-path knowledge grows in step.
"""
import numpy as np

from qudit_eraser import DiscriminationProblem, InteractionParams, distinguishability, visibility
from qudit_eraser.discrimination import path_conditional_entropy
from qudit_eraser.interferometer import fringe, visibility_scan

###############################################################################
# A single fringe, sampled at a few phases.

p = InteractionParams(alpha=np.pi / 3)
phases = np.linspace(0, 2 * np.pi, 9)
print("P(D1) over the phase:", np.round(fringe(p, phases), 4))
print("closed-form V =", visibility(p), " scanned V =", visibility_scan(p))

###############################################################################
# Sweep alpha. D^2 + V^2 stays at one for a pure ancilla.

print(f"{'alpha/pi':>8} {'V':>8} {'D':>8} {'D2+V2':>8} {'H(P|Ms)':>8}")
for a in np.linspace(0, np.pi, 9):
    p = InteractionParams(a)
    prob = DiscriminationProblem.canonical(a)
    v, d = visibility(p), distinguishability(prob)
    print(f"{a / np.pi:8.3f} {v:8.4f} {d:8.4f} {d * d + v * v:8.4f} {path_conditional_entropy(prob):8.4f}")
