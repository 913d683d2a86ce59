"""Flat and curved sections.

A Hermann action on the Grassmannian dual so(2, 3) has flat (abelian)
sections; the maximal torus of SU(3) acting on CP^2 -- dually, the torus
of SU(1, 2) acting on complex hyperbolic space -- is polar with a curved
section.  Duality flips the sign of every sectional curvature.
"""
import numpy as np

from dualpolar import catalog
from dualpolar.actions import is_polar_action, section_curvatures
from dualpolar.duality import dualize_algebra, psi_image

for key in ("hermann/so(2,3)/q=2,r=2", "torus/su(1,2)"):
    e = catalog.get_entry(key)
    report = is_polar_action(e.subalgebra, e.decomposition, seed=0)
    pair = dualize_algebra(e.decomposition)
    dual_k = section_curvatures(psi_image(pair, report.section), pair.compact_decomposition)
    print(f"{key}: {report.polar.value}, cohomogeneity {report.cohomogeneity}, hyperpolar {report.hyperpolar}")
    print("   curvatures      ", np.round(report.section_curvatures, 6))
    print("   dual curvatures ", np.round(dual_k, 6))
