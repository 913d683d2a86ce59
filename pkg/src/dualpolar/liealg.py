"""Real Lie algebras realized as spans of complex matrices.

An algebra of real dimension ``d`` inside ``gl(N, C)`` stores its basis,
the structure tensor ``c[i, j, k]`` with ``[B_i, B_j] = sum_k c[i, j, k] B_k``
and the Killing Gram matrix.  Elements are handled as real coordinate
vectors of length ``d`` everywhere except at the matrix boundary.
"""
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    AmbientNotSemisimple,
    DependentBasis,
    DimensionError,
    InvalidMatrix,
    NotClosed,
)
from .linalg import TAU_RANK, BilinearForm

TAU_CLOSE = 1e-9
TAU_CLUSTER = 1e-6


def bracket(x, y):
    """Matrix commutator ``xy - yx``."""
    x = linalg.as_matrix(x)
    y = linalg.as_matrix(y)
    if x.shape != y.shape or x.shape[0] != x.shape[1]:
        raise DimensionError(f"cannot bracket shapes {x.shape} and {y.shape}")
    return x @ y - y @ x


def _realify(mats):
    """Stack complex N x N matrices as columns of a real (2 N^2, d) array."""
    mats = np.asarray(mats, dtype=complex)
    flat = mats.reshape(mats.shape[0], -1)
    return np.concatenate([flat.real, flat.imag], axis=1).T


@dataclass(frozen=True, eq=False)
class MatrixLieAlgebra:
    name: str
    ambient_size: int
    basis: np.ndarray
    structure: np.ndarray = field(repr=False)
    killing: BilinearForm = field(repr=False)

    @property
    def dim(self):
        return self.basis.shape[0]

    def element(self, coeffs):
        """Matrix of the element with the given coordinates."""
        return np.tensordot(np.asarray(coeffs, dtype=float), self.basis, axes=1)

    def coordinates(self, mats, tol=TAU_CLOSE):
        """Coordinates of matrices in the span of the basis.

        Returns ``(coeffs, residual)``; raises ``NotClosed`` when some matrix
        lies farther than ``tol`` (scaled by its size) from the span.
        """
        mats = np.asarray(mats, dtype=complex)
        single = mats.ndim == 2
        if single:
            mats = mats[None]
        coeffs, resid = _solve_coords(self._realified, mats)
        if resid > tol:
            raise NotClosed(f"matrix not in span of {self.name} (residual {resid:.3e})")
        return (coeffs[0] if single else coeffs), resid

    @property
    def _realified(self):
        cached = self.__dict__.get("_real_cache")
        if cached is None:
            cached = _realify(self.basis)
            object.__setattr__(self, "_real_cache", cached)
        return cached

    def bracket(self, x, y):
        """Bracket of coordinate vectors (or stacks of them, broadcasting)."""
        xc = np.tensordot(np.asarray(x, float), self.structure, axes=([-1], [0]))
        return np.einsum("...j,...jk->...k", np.asarray(y, float), xc)

    def ad(self, x):
        """Matrix of ``ad x`` acting on coordinate column vectors."""
        return np.einsum("i,ijk->kj", np.asarray(x, float), self.structure)

    def ad_matrices(self):
        return np.transpose(self.structure, (0, 2, 1))

    def to_json(self):
        b = self.basis
        return {
            "name": self.name,
            "ambient_size": int(self.ambient_size),
            "basis": np.stack([b.real, b.imag], axis=-1).tolist(),
        }


def _solve_coords(real_basis, mats):
    rhs = _realify(mats)
    coeffs, *_ = np.linalg.lstsq(real_basis, rhs, rcond=None)
    scale = max(1.0, float(np.max(np.abs(rhs), initial=0.0)))
    resid = float(np.max(np.abs(real_basis @ coeffs - rhs), initial=0.0)) / scale
    return coeffs.T, resid


def _structure_constants(basis, real_basis):
    d = basis.shape[0]
    prods = np.einsum("iab,jbc->ijac", basis, basis)
    brackets = prods - np.transpose(prods, (1, 0, 2, 3))
    coeffs, resid = _solve_coords(real_basis, brackets.reshape(d * d, *basis.shape[1:]))
    return coeffs.reshape(d, d, d), resid


def jacobi_residual(structure):
    """Largest violation of the Jacobi identity by a structure tensor."""
    c = structure
    t = np.einsum("ijl,lkm->ijkm", c, c)
    jac = t + np.transpose(t, (1, 2, 0, 3)) + np.transpose(t, (2, 0, 1, 3))
    return float(np.max(np.abs(jac), initial=0.0))


def killing_gram(structure):
    ad = np.transpose(structure, (0, 2, 1))
    return np.einsum("ikj,ljk->il", ad, ad)


def build_algebra(name, basis, tol=TAU_CLOSE, tol_rank=TAU_RANK):
    """Validate a matrix basis and compute structure constants and Killing form.

    Raises ``DependentBasis`` if the matrices are not real-linearly
    independent and ``NotClosed`` if their span is not closed under the
    commutator.
    """
    basis = linalg.as_matrix(np.asarray(basis, dtype=complex), ndim=3)
    if basis.shape[0] == 0:
        raise InvalidMatrix("basis must be nonempty")
    if basis.shape[1] != basis.shape[2]:
        raise DimensionError(f"basis matrices must be square, got {basis.shape[1:]}")
    real_basis = _realify(basis)
    if linalg.numerical_rank(real_basis, tol_rank) < basis.shape[0]:
        raise DependentBasis(f"basis of {name} is not linearly independent over R")
    structure, resid = _structure_constants(basis, real_basis)
    if resid > tol:
        raise NotClosed(f"{name}: span not closed under brackets (residual {resid:.3e})")
    jac = jacobi_residual(structure)
    if jac > tol * max(1.0, float(np.max(np.abs(structure))) ** 2):
        raise NotClosed(f"{name}: Jacobi identity fails (residual {jac:.3e})")
    # exact zeros keep abelian algebras exactly abelian
    structure[np.abs(structure) < 1e-13] = 0.0
    alg = MatrixLieAlgebra(name, basis.shape[1], basis, structure, BilinearForm(killing_gram(structure)))
    object.__setattr__(alg, "_real_cache", real_basis)
    return alg


def killing_form(alg):
    return alg.killing


def is_semisimple(alg, tol=TAU_RANK):
    """Cartan's criterion: the Killing form is non-degenerate."""
    if not np.any(alg.killing.gram):
        return False
    return alg.killing.is_nondegenerate(tol)


@dataclass(frozen=True, eq=False)
class Subspace:
    """Span of the rows of ``coeffs`` inside ``parent`` (coordinates)."""

    parent: MatrixLieAlgebra
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.size == 0:
            c = np.zeros((0, self.parent.dim))
        c = linalg.as_matrix(np.atleast_2d(c))
        if c.shape[1] != self.parent.dim:
            raise DimensionError(f"coefficient rows have length {c.shape[1]}, algebra has dim {self.parent.dim}")
        if c.shape[0] and linalg.numerical_rank(c) < c.shape[0]:
            raise DependentBasis("subspace rows are linearly dependent")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def span(cls, parent, rows, tol=TAU_RANK):
        """Subspace spanned by possibly dependent rows (orthonormalized)."""
        rows = np.asarray(rows, dtype=float)
        if rows.size == 0:
            return cls(parent, np.zeros((0, parent.dim)))
        return cls(parent, linalg.row_space(np.atleast_2d(rows), tol))

    @classmethod
    def full(cls, parent):
        return cls(parent, np.eye(parent.dim))

    @classmethod
    def zero(cls, parent):
        return cls(parent, np.zeros((0, parent.dim)))

    @classmethod
    def from_matrices(cls, parent, mats, tol=TAU_CLOSE):
        """Subspace spanned by matrices lying in ``parent``."""
        mats = np.asarray(mats, dtype=complex)
        if mats.size == 0:
            return cls.zero(parent)
        coeffs, _ = parent.coordinates(mats, tol)
        return cls.span(parent, coeffs)

    @property
    def dim(self):
        return self.coeffs.shape[0]

    def matrices(self):
        return np.tensordot(self.coeffs, self.parent.basis, axes=1)

    def orthonormal(self, form=None):
        return linalg.gram_schmidt(self.coeffs, form) if self.dim else self.coeffs

    def contains(self, vectors, tol=linalg.TAU_SPAN):
        return linalg.span_residual(vectors, self.coeffs) <= tol

    def to_json(self):
        return {"parent": self.parent.name, "coeffs": self.coeffs.tolist()}


def closure_residual(sub):
    """Largest distance of ``[v, w]`` from ``span(sub)`` over orthonormal rows."""
    if sub.dim < 2:
        return 0.0
    q = linalg.row_space(sub.coeffs)
    br = sub.parent.bracket(q[:, None, :], q[None, :, :]).reshape(-1, sub.parent.dim)
    return linalg.span_residual(br, q)


def is_subalgebra(sub, tol=TAU_CLOSE):
    return closure_residual(sub) <= tol


def center(alg, tol=TAU_RANK):
    """Subspace of elements commuting with the whole algebra."""
    d = alg.dim
    # rows indexed by (j, k): sum_i z_i c[i, j, k] = 0
    m = np.transpose(alg.structure, (1, 2, 0)).reshape(d * d, d)
    if not np.any(m):
        return Subspace.full(alg)
    return Subspace(alg, linalg.nullspace(m, tol))


@dataclass(frozen=True)
class ReductivityReport:
    is_algebraic_closure_ok: bool
    killing_restriction_rank: int
    is_nondegenerate: bool
    smallest_abs_eigenvalue: float
    dim: int
    algebraic_attested: bool = True

    @property
    def reductive(self):
        """Verdict of the restricted-Killing-form criterion.

        Only meaningful for subalgebras the caller attests to be algebraic.
        """
        return self.is_algebraic_closure_ok and self.algebraic_attested and self.is_nondegenerate

    def to_json(self):
        return {
            "is_algebraic_closure_ok": self.is_algebraic_closure_ok,
            "killing_restriction_rank": self.killing_restriction_rank,
            "is_nondegenerate": self.is_nondegenerate,
            "smallest_abs_eigenvalue": self.smallest_abs_eigenvalue,
            "dim": self.dim,
            "algebraic_attested": self.algebraic_attested,
            "reductive": self.reductive,
        }


def is_reductive_algebraic(sub, ambient=None, tol=TAU_RANK, tol_close=TAU_CLOSE, algebraic=True):
    """Restricted Killing form test for reductive algebraic subalgebras.

    ``algebraic`` is the caller's attestation that ``sub`` is the Lie algebra
    of an algebraic subgroup; it is not decided numerically.
    """
    ambient = sub.parent if ambient is None else ambient
    if ambient is not sub.parent:
        raise DimensionError("subspace does not belong to the given ambient algebra")
    if not is_semisimple(ambient, tol):
        raise AmbientNotSemisimple(f"{ambient.name} is not semisimple")
    closed = is_subalgebra(sub, tol_close)
    if sub.dim == 0:
        return ReductivityReport(closed, 0, True, 0.0, 0, algebraic)
    q = linalg.row_space(sub.coeffs)
    ev = np.abs(np.linalg.eigvalsh(ambient.killing.restrict(q).gram))
    # the cut scales with the ambient spectrum: a totally isotropic
    # restriction has only roundoff eigenvalues, so a self-relative cut
    # would count noise as rank
    scale = max(float(np.max(ev)), float(np.max(np.abs(ambient.killing.eigenvalues()))))
    rank = int(np.sum(ev > tol * scale)) if scale > 0 else 0
    return ReductivityReport(closed, rank, rank == sub.dim, float(np.min(ev)), sub.dim, algebraic)


def _cluster(values, tol):
    """Single-linkage clustering of complex numbers; returns list of index lists."""
    n = len(values)
    labels = list(range(n))

    def find(i):
        while labels[i] != i:
            labels[i] = labels[labels[i]]
            i = labels[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= tol:
                labels[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def is_ad_semisimple(z, ambient, tol=TAU_RANK, cluster_tol=TAU_CLUSTER):
    """True when ``ad z`` is diagonalizable over C.

    Eigenvalues are clustered at ``cluster_tol`` (relative to the size of
    ``ad z``); each cluster's geometric multiplicity must match its size.
    """
    a = ambient.ad(z)
    d = a.shape[0]
    scale = float(np.max(np.abs(a), initial=0.0))
    if scale == 0.0:
        return True
    a = a / scale
    ev = np.linalg.eigvals(a)
    for group in _cluster(ev, cluster_tol):
        lam = np.mean(ev[group])
        shifted = a - lam * np.eye(d)
        s = np.linalg.svd(shifted, compute_uv=False)
        # absolute threshold: a has unit scale
        nullity = int(np.sum(s <= tol * max(1.0, s[0])))
        if nullity != len(group):
            return False
    return True


def conjugation_matrix(alg, g, tol=TAU_CLOSE):
    """Coordinate matrix of ``X -> g X g^-1`` restricted to ``alg``.

    Raises ``NotClosed`` if conjugation by ``g`` does not preserve the span.
    """
    g = np.asarray(g, dtype=complex)
    ginv = np.linalg.inv(g)
    images = np.einsum("ab,ibc,cd->iad", g, alg.basis, ginv, optimize=True)
    coeffs, _ = alg.coordinates(images, tol)
    return np.real_if_close(coeffs.T).astype(float)


def automorphism_residual(alg, t):
    """Largest ``|t[x, y] - [t x, t y]|`` over all basis pairs."""
    t = np.asarray(t, dtype=float)
    lhs = np.einsum("ijk,lk->ijl", alg.structure, t)
    rhs = np.einsum("ai,bj,abk->ijk", t, t, alg.structure, optimize=True)
    return float(np.max(np.abs(lhs - rhs), initial=0.0))
