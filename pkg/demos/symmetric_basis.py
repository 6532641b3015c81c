"""
The entropy-optimal path measurement
====================================

For two ancilla states the measurement that leaves the least uncertainty
about the path sits symmetrically between them in their common plane. Here
we compare it with a brute-force search over the whole Bloch sphere.
"""
import numpy as np

from qudit_eraser import DiscriminationProblem, brute_force_optimal_basis, symmetric_basis
from qudit_eraser.discrimination import path_conditional_entropy
from qudit_eraser.qstate import to_bloch

prob = DiscriminationProblem.canonical(0.75 * np.pi)
sym = symmetric_basis(prob)
print("basis vectors on the Bloch sphere:")
for v in sym.vectors:
    print("  ", np.round(np.asarray(to_bloch(v)), 4))

h_sym = path_conditional_entropy(prob, sym)
_, h_bf = brute_force_optimal_basis(prob, n_samples=5000)
print(f"H(P|M) symmetric = {h_sym:.12f}")
print(f"H(P|M) search    = {h_bf:.12f}")

###############################################################################
# Any two ancilla states work, including a random pair. The frame that maps
# them onto the canonical pair is found automatically.

rng = np.random.default_rng(1)
z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
prob = DiscriminationProblem(*(v / np.linalg.norm(v) for v in z))
print(f"random pair: |<phi1|phi2>| = {abs(prob.overlap):.4f}, "
      f"H_sym = {path_conditional_entropy(prob, symmetric_basis(prob)):.10f}, "
      f"H_search = {brute_force_optimal_basis(prob, n_samples=5000)[1]:.10f}")
