"""
Higher-dimensional ancillas
===========================

With a d-level ancilla the two states still span a plane, so the optimal
path measurement and the erasers live in that plane and the qubit results
carry over.
"""
import numpy as np

from qudit_eraser import DiscriminationProblem, InteractionParams, symmetric_basis, verify_erasure_identity
from qudit_eraser.discrimination import brute_force_optimal_basis, path_conditional_entropy

rng = np.random.default_rng(5)
for d in (3, 5, 8):
    z = rng.normal(size=(2, d)) + 1j * rng.normal(size=(2, d))
    phi1, phi2 = (v / np.linalg.norm(v) for v in z)
    prob = DiscriminationProblem(phi1, phi2)
    sym = symmetric_basis(prob)
    in_plane = np.sum(np.abs(sym.matrix[:, :2].conj().T @ phi1) ** 2)
    chk = verify_erasure_identity(InteractionParams(0.0), phi1=phi1, phi2=phi2)
    _, h_bf = brute_force_optimal_basis(prob, n_samples=2000)
    print(f"d = {d}: in-plane weight {in_plane:.12f}, H_sym {path_conditional_entropy(prob, sym):.8f}, "
          f"H_search {h_bf:.8f}, identity residual {chk.residual:.1e}")
