"""The compact dual ``g* = k + ip`` and the linear bijection ``psi``.

``psi`` sends ``X + Y`` (``X`` in ``k``, ``Y`` in ``p``) to ``X + iY``.  It is
real-linear and bijective but not a homomorphism: brackets of two
``p``-elements change sign.
"""
import re
from dataclasses import dataclass

import numpy as np

from . import linalg
from .cartan import canonical_defect, make_decomposition
from .errors import DualityBroken, NotClosed, NotCompactForm, NotThetaStable
from .liealg import TAU_CLOSE, Subspace, build_algebra, closure_residual, is_subalgebra
from .linalg import TAU_RANK, TAU_SPAN, BilinearForm


@dataclass(frozen=True, eq=False)
class DualPair:
    noncompact: object
    decomposition: object
    compact: object
    compact_decomposition: object
    psi_matrix: np.ndarray
    dual_form: BilinearForm

    @property
    def dim_k(self):
        return self.decomposition.k.dim

    def to_json(self):
        return {
            "noncompact": self.noncompact.to_json(),
            "compact": self.compact.to_json(),
            "psi": self.psi_matrix.tolist(),
            "dim_k": self.dim_k,
        }


_SIGNATURE_NAME = re.compile(r"^(so|su|sp)\((\d+),(\d+)\)$")


def _dual_name(name):
    """Classical name of the compact dual (``so(1,3) -> so(4)``, ``sl(n,R) -> su(n)``)."""
    m = _SIGNATURE_NAME.match(name)
    if m:
        return f"{m.group(1)}({int(m.group(2)) + int(m.group(3))})"
    m = re.match(r"^sl\((\d+),R\)$", name)
    if m:
        return f"su({m.group(1)})"
    return name if "(" in name and "," not in name else name + "*"


def dualize_algebra(dec, tol=TAU_CLOSE, tol_rank=TAU_RANK):
    """Build ``g* = k + ip`` inside the same matrix ambient as ``g``.

    The basis of ``g*`` is the ``k``-basis of ``dec`` followed by ``i`` times
    its ``p``-basis, so ``psi`` is a change of coordinates.
    """
    alg = dec.algebra
    k_rows, p_rows = dec.k.coeffs, dec.p.coeffs
    mats = np.concatenate([alg.element(k_rows) if dec.k.dim else np.zeros((0,) + alg.basis.shape[1:]),
                           1j * alg.element(p_rows) if dec.p.dim else np.zeros((0,) + alg.basis.shape[1:])])
    try:
        compact = build_algebra(_dual_name(alg.name), mats, tol, tol_rank)
    except NotClosed as exc:
        raise DualityBroken(f"k + ip is not closed: {exc}") from None
    ev = compact.killing.eigenvalues()
    if not (ev[-1] < -tol_rank * abs(ev[0])):
        raise NotCompactForm(f"{compact.name}: Killing form is not negative definite")
    change = np.vstack([k_rows, p_rows])
    psi_matrix = np.linalg.inv(change.T)
    sigma = np.diag([1.0] * dec.k.dim + [-1.0] * dec.p.dim)
    compact_dec = make_decomposition(compact, sigma, compact_side=True, tol=tol, tol_rank=tol_rank)
    dk = dec.k.dim
    dual_form = BilinearForm(-compact.killing.gram[dk:, dk:])
    return DualPair(alg, dec, compact, compact_dec, psi_matrix, dual_form)


def psi(pair, x):
    """Coordinates in ``g*`` of ``psi(x)`` for ``x`` given in ``g`` coordinates."""
    return np.asarray(x, dtype=float) @ pair.psi_matrix.T


def psi_inverse(pair, y):
    return np.linalg.solve(pair.psi_matrix, np.asarray(y, dtype=float).T).T


def psi_image(pair, sub):
    """``psi(sub)`` without any precondition check."""
    rows = psi(pair, sub.coeffs) if sub.dim else np.zeros((0, pair.compact.dim))
    return Subspace(pair.compact, rows)


def psi_closure_residual(pair, sub):
    """Closure residual of ``psi(sub)`` as a subspace of ``g*``."""
    return closure_residual(psi_image(pair, sub))


def dualize_subalgebra(pair, sub, tol=TAU_CLOSE, tol_rank=TAU_RANK):
    """``h* = psi(h)`` for a theta-stable subalgebra ``h``.

    Raises ``NotThetaStable`` (carrying the defect dimension) if ``h`` is not
    canonically embedded, and ``DualityBroken`` if the image fails to close.
    """
    if not is_subalgebra(sub, tol):
        raise NotClosed("input is not a subalgebra")
    defect = canonical_defect(sub, pair.decomposition, tol_rank)
    if defect:
        raise NotThetaStable(f"subalgebra is not theta-stable (defect {defect})", defect=defect)
    image = psi_image(pair, sub)
    resid = closure_residual(image)
    if resid > tol:
        raise DualityBroken(f"psi(h) is not closed (residual {resid:.3e})")
    if canonical_defect(image, pair.compact_decomposition, tol_rank):
        raise DualityBroken("psi(h) does not split along k + ip")
    return image


def roundtrip(pair, sub):
    """Largest principal angle between ``sub`` and ``psi^-1(psi(sub))``."""
    if sub.dim == 0:
        return 0.0
    back = psi_inverse(pair, psi(pair, sub.coeffs))
    return float(np.max(linalg.principal_angles(sub.coeffs, back)))


def roundtrip_ok(pair, sub, tol=TAU_SPAN):
    return roundtrip(pair, sub) <= tol
