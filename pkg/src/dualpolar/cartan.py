"""Cartan involutions, symmetric decompositions and embedding tests."""
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import NotCartan, NotClosed, NotCompactForm, NotInP, NotInvolution, NotStarClosed
from .liealg import TAU_CLOSE, Subspace, automorphism_residual, is_subalgebra
from .linalg import TAU_RANK, TAU_SPAN, BilinearForm


@dataclass(frozen=True, eq=False)
class CartanDecomposition:
    """Involution ``theta`` of an algebra with its (+1, -1) eigenspaces.

    On the noncompact side ``theta`` is a Cartan involution and ``b_theta`` is
    ``-B(X, theta Y)``.  On the compact side (``compact_side=True``) the
    decomposition describes a compact symmetric pair ``k + ip`` and
    ``b_theta`` is ``-B``.  In both cases ``b_theta`` is positive definite
    and restricts on ``p`` to the symmetric space metric.
    """

    algebra: object
    theta: np.ndarray
    k: Subspace
    p: Subspace
    b_theta: BilinearForm
    compact_side: bool = False

    @property
    def k_basis(self):
        return self.k

    @property
    def p_basis(self):
        return self.p

    def apply(self, rows):
        """Apply ``theta`` to coordinate rows."""
        return np.asarray(rows, dtype=float) @ self.theta.T

    def p_metric(self):
        """Gram matrix of the symmetric space metric on ``p`` (rows of ``self.p``)."""
        return self.b_theta.restrict(self.p.coeffs)

    def to_json(self):
        return {
            "algebra": self.algebra.name,
            "theta": self.theta.tolist(),
            "k": self.k.coeffs.tolist(),
            "p": self.p.coeffs.tolist(),
            "compact_side": self.compact_side,
        }


def make_decomposition(alg, theta, compact_side=False, tol=TAU_CLOSE, tol_rank=TAU_RANK):
    """Validate an involutive automorphism and split the algebra along it."""
    theta = np.asarray(theta, dtype=float)
    d = alg.dim
    if theta.shape != (d, d):
        raise NotInvolution(f"theta must be {d}x{d}")
    if np.max(np.abs(theta @ theta - np.eye(d)), initial=0.0) > tol:
        raise NotInvolution("theta is not an involution")
    if automorphism_residual(alg, theta) > tol * max(1.0, float(np.max(np.abs(alg.structure)))):
        raise NotInvolution("theta is not an automorphism")
    plus, minus = linalg.eigensplit_involution(theta, tol_rank, tol)
    kill = alg.killing.gram
    if compact_side:
        form = BilinearForm(-kill)
        if not form.is_positive_definite(tol_rank):
            raise NotCompactForm(f"{alg.name}: Killing form is not negative definite")
    else:
        gram = -kill @ theta
        if np.max(np.abs(gram - gram.T), initial=0.0) > tol * max(1.0, float(np.max(np.abs(gram)))):
            raise NotCartan("-B(X, theta Y) is not symmetric")
        form = BilinearForm(gram)
        if not form.is_positive_definite(tol_rank):
            raise NotCartan(f"{alg.name}: -B(X, theta Y) is not positive definite")
    k = Subspace(alg, linalg.gram_schmidt(plus, form) if plus.size else plus)
    p = Subspace(alg, linalg.gram_schmidt(minus, form) if minus.size else minus)
    return CartanDecomposition(alg, theta, k, p, form, compact_side)


def star_matrix(alg, tol=TAU_CLOSE):
    """Coordinate matrix of ``X -> -X^H`` on ``alg``."""
    images = -np.conj(np.transpose(alg.basis, (0, 2, 1)))
    try:
        coeffs, _ = alg.coordinates(images, tol)
    except NotClosed:
        raise NotStarClosed(f"{alg.name} is not closed under X -> -X^H") from None
    return coeffs.T


def cartan_from_star(alg, tol=TAU_CLOSE, tol_rank=TAU_RANK):
    """Cartan decomposition with ``theta(X) = -X^H``."""
    return make_decomposition(alg, star_matrix(alg, tol), False, tol, tol_rank)


def canonical_defect(sub, dec, tol=TAU_RANK):
    """``dim(h) - dim(h & k) - dim(h & p)``; zero iff ``h`` is theta-stable."""
    hk = linalg.intersect(sub.coeffs, dec.k.coeffs, tol)
    hp = linalg.intersect(sub.coeffs, dec.p.coeffs, tol)
    return sub.dim - hk.shape[0] - hp.shape[0]


def is_canonically_embedded(sub, dec, tol=TAU_SPAN):
    """True iff ``theta(sub) = sub``."""
    if sub.dim == 0:
        return True
    return linalg.same_span(sub.coeffs, dec.apply(sub.coeffs), tol=tol)


def intersect_with(sub, part, tol=TAU_RANK):
    """Numerical intersection of ``sub`` with ``part`` (e.g. ``dec.k``)."""
    rows = linalg.intersect(sub.coeffs, part.coeffs, tol)
    return Subspace(sub.parent, rows) if rows.size else Subspace.zero(sub.parent)


@dataclass(frozen=True, eq=False)
class Intersections:
    hk: Subspace
    hp: Subspace
    defect: int

    @property
    def canonical(self):
        return self.defect == 0


def intersections(sub, dec, tol=TAU_RANK):
    """``h & k`` and ``h & p`` plus the non-canonical defect."""
    hk = intersect_with(sub, dec.k, tol)
    hp = intersect_with(sub, dec.p, tol)
    return Intersections(hk, hp, sub.dim - hk.dim - hp.dim)


def triple_residual(s, dec):
    """Largest distance of ``[[x, y], z]`` from ``span(s)`` (metric ``b_theta``)."""
    if s.dim < 2:
        return 0.0
    q = linalg.gram_schmidt(s.coeffs, dec.b_theta)
    alg = s.parent
    xy = alg.bracket(q[:, None, :], q[None, :, :])
    xyz = alg.bracket(xy[:, :, None, :], q[None, None, :, :]).reshape(-1, alg.dim)
    return linalg.span_residual(xyz, q, dec.b_theta)


def is_lie_triple(s, dec, tol=TAU_CLOSE, tol_span=TAU_SPAN):
    """True iff ``[[s, s], s]`` lies in ``s``; ``s`` must lie in ``p``."""
    if s.dim and linalg.span_residual(linalg.row_space(s.coeffs), dec.p.coeffs) > tol_span:
        raise NotInP("subspace is not contained in p")
    return triple_residual(s, dec) <= tol


def fixed_point_algebra(sigma, alg, tol=TAU_CLOSE, tol_rank=TAU_RANK):
    """The +1 eigenspace of an involutive automorphism ``sigma``."""
    sigma = np.asarray(sigma, dtype=float)
    d = alg.dim
    if sigma.shape != (d, d) or np.max(np.abs(sigma @ sigma - np.eye(d)), initial=0.0) > tol:
        raise NotInvolution("sigma is not an involution")
    if automorphism_residual(alg, sigma) > tol * max(1.0, float(np.max(np.abs(alg.structure)))):
        raise NotInvolution("sigma is not an automorphism")
    plus, _ = linalg.eigensplit_involution(sigma, tol_rank, tol)
    sub = Subspace(alg, plus) if plus.size else Subspace.zero(alg)
    if not is_subalgebra(sub, tol):
        raise NotClosed("fixed point set is not closed; automorphism check inconsistent")
    return sub
