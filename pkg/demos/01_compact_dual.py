"""From sl(2, R) to su(2): Cartan decomposition and the duality map.

Run with ``python3 demos/01_compact_dual.py``.
"""
import numpy as np

from dualpolar.catalog import real_form
from dualpolar.duality import dualize_algebra, psi

# %% The noncompact algebra and its Cartan decomposition
alg, dec = real_form("sl", 2)
print(f"{alg.name}: dim {alg.dim}, k has dim {dec.k.dim}, p has dim {dec.p.dim}")
print("Killing form eigenvalues:", np.round(alg.killing.eigenvalues(), 6))

# theta(X) = -X^T; on k it is the identity, on p minus the identity
print("k is spanned by\n", np.round(alg.element(dec.k.coeffs[0]).real, 3))

# %% Dualize: g* = k + i p, realized with the same 2 x 2 matrices
pair = dualize_algebra(dec)
ev = pair.compact.killing.eigenvalues()
print(f"\ncompact dual {pair.compact.name}: Killing eigenvalues {np.round(ev, 6)} (all negative)")

# %% psi is linear but flips the sign of brackets of two p-vectors
y1, y2 = dec.p.coeffs
lhs = pair.compact.bracket(psi(pair, y1), psi(pair, y2))
rhs = psi(pair, alg.bracket(y1, y2))
print("[psi y1, psi y2] + psi[y1, y2] =", np.round(lhs + rhs, 12))
