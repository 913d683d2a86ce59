"""Polar and non-polar actions on real hyperbolic space and on the sphere.

The subgroups SO(1, k) x L of SO(1, n) act polarly exactly when L acts
polarly on R^(n-k).  Here L = SO(2) gives a polar action; L = SO(3) acting
on R^7 through its irreducible 7-dimensional representation does not.
"""
from dualpolar import catalog
from dualpolar.actions import is_polar_action, is_polar_linear
from dualpolar.duality import dualize_algebra, dualize_subalgebra

# %% The spin-3 representation on its own
report = is_polar_linear(catalog.spin3_on_R7(), seed=0)
print(f"so(3) on R^7: {report.polar.value}, cohomogeneity {report.cohomogeneity}, "
      f"trilinear residual {report.orthogonality_residual:.3f}")

# %% Both sides of the duality for a few catalog entries
for key in ("thm8.1/i/k=2,n=4,L=so2", "thm8.1/ii/n=4,L=t2", "thm8.1/i/k=1,n=8,L=spin3"):
    e = catalog.get_entry(key)
    pair = dualize_algebra(e.decomposition)
    h_star = dualize_subalgebra(pair, e.subalgebra)
    nc = is_polar_action(e.subalgebra, e.decomposition, seed=0)
    cp = is_polar_action(h_star, pair.compact_decomposition, seed=0)
    print(f"{key:28s} on {e.algebra.name}/k: {nc.polar.value:18s} "
          f"dual on {pair.compact.name}/k: {cp.polar.value:18s} cohomogeneity {nc.cohomogeneity}")
