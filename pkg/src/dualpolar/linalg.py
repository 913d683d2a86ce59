"""Form-aware numerical kernel: ranks, null spaces, complements, eigensplits.

Subspaces are always passed around as 2-d arrays whose *rows* span the
subspace, in the coordinates of some ambient real vector space.
"""
from dataclasses import dataclass

import numpy as np
from scipy.linalg import subspace_angles

from .errors import FormNotDefinite, InvalidMatrix, NotInvolution

TAU_RANK = 1e-8
TAU_SPAN = 1e-7
TAU_SYM = 1e-9

__all__ = [
    "TAU_RANK",
    "TAU_SPAN",
    "BilinearForm",
    "as_matrix",
    "numerical_rank",
    "nullspace",
    "row_space",
    "gram_schmidt",
    "orthocomplement",
    "eigensplit_involution",
    "principal_angles",
    "same_span",
    "intersect",
    "span_residual",
]


def as_matrix(m, ndim=2):
    """Return ``m`` as an ndarray, rejecting NaN/Inf entries."""
    a = np.asarray(m)
    if a.dtype == object:
        raise InvalidMatrix("matrix entries must be numeric")
    if not np.issubdtype(a.dtype, np.complexfloating):
        a = a.astype(float)
    if ndim is not None and a.ndim != ndim:
        raise InvalidMatrix(f"expected a {ndim}-d array, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidMatrix("matrix has non-finite entries")
    return a


def _empty_rows(cols, dtype=float):
    return np.zeros((0, cols), dtype=dtype)


def numerical_rank(m, tol=TAU_RANK, atol=0.0):
    """Number of singular values above ``tol`` times the largest one.

    With ``atol`` set, singular values must also exceed ``atol``; this keeps
    roundoff-level matrices at rank zero.
    """
    a = as_matrix(m)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > max(tol * s[0], atol)))


def _svd_split(a, tol, atol):
    rows, cols = a.shape
    if a.size == 0:
        return 0, np.eye(cols, dtype=a.dtype)
    _, s, vh = np.linalg.svd(a)
    rank = 0 if s[0] == 0.0 else int(np.sum(s > max(tol * s[0], atol)))
    return rank, vh


def nullspace(m, tol=TAU_RANK, atol=0.0):
    """Orthonormal rows spanning ``{v : m @ v = 0}``.

    A singular value counts as zero when it is at most ``tol`` times the
    largest one or at most ``atol``.
    """
    a = as_matrix(m)
    rank, vh = _svd_split(a, tol, atol)
    # rows of vh are right singular vectors; conjugate to get kernel vectors
    return vh[rank:].conj()


def row_space(m, tol=TAU_RANK, atol=0.0):
    """Orthonormal rows spanning the row space of ``m``."""
    a = as_matrix(m)
    rank, vh = _svd_split(a, tol, atol)
    return vh[:rank].conj()


@dataclass(frozen=True)
class BilinearForm:
    """A real symmetric bilinear form given by its Gram matrix."""

    gram: np.ndarray

    def __post_init__(self):
        g = as_matrix(self.gram)
        if g.shape[0] != g.shape[1]:
            raise InvalidMatrix(f"Gram matrix must be square, got {g.shape}")
        scale = max(1.0, float(np.max(np.abs(g)))) if g.size else 1.0
        if g.size and np.max(np.abs(g - g.T)) > TAU_SYM * scale:
            raise InvalidMatrix("Gram matrix is not symmetric")
        object.__setattr__(self, "gram", (g + g.T) / 2)

    @property
    def dim(self):
        return self.gram.shape[0]

    def __call__(self, x, y):
        return np.asarray(x) @ self.gram @ np.asarray(y)

    def restrict(self, rows):
        """Gram matrix of the form on the span of ``rows``."""
        rows = np.atleast_2d(rows)
        return BilinearForm(rows @ self.gram @ rows.T)

    def eigenvalues(self):
        return np.linalg.eigvalsh(self.gram)

    def signature(self, tol=TAU_RANK):
        """Return ``(n_plus, n_minus, n_zero)``."""
        ev = self.eigenvalues()
        if ev.size == 0:
            return 0, 0, 0
        cut = tol * np.max(np.abs(ev)) if np.any(ev) else 0.0
        pos = int(np.sum(ev > cut))
        neg = int(np.sum(ev < -cut))
        return pos, neg, ev.size - pos - neg

    def definiteness(self, tol=TAU_RANK):
        """+1 (positive definite), -1 (negative definite) or 0."""
        pos, neg, _ = self.signature(tol)
        if pos == self.dim:
            return 1
        if neg == self.dim:
            return -1
        return 0

    def is_positive_definite(self, tol=TAU_RANK):
        return self.dim == 0 or self.definiteness(tol) == 1

    def is_nondegenerate(self, tol=TAU_RANK):
        return self.signature(tol)[2] == 0


def _as_form(form, dim):
    if form is None:
        return BilinearForm(np.eye(dim))
    if isinstance(form, BilinearForm):
        return form
    return BilinearForm(form)


def gram_schmidt(rows, form=None, tol=TAU_RANK):
    """Orthonormalize ``rows`` under a positive definite form.

    Modified Gram-Schmidt with one re-orthogonalization pass; vectors whose
    remaining norm falls below ``tol`` times their original norm are dropped.
    """
    rows = as_matrix(np.atleast_2d(rows)) if np.size(rows) else None
    if rows is None:
        dim = 0 if form is None else _as_form(form, 0).dim
        return _empty_rows(dim)
    g = _as_form(form, rows.shape[1]).gram
    out = []
    for v in rows:
        w = v.astype(float, copy=True)
        n0 = np.sqrt(abs(w @ g @ w))
        if n0 == 0.0:
            continue
        for _ in range(2):
            for q in out:
                w = w - (q @ g @ w) * q
        n1 = np.sqrt(abs(w @ g @ w))
        if n1 > tol * n0:
            out.append(w / n1)
    if not out:
        return _empty_rows(rows.shape[1])
    return np.array(out)


def orthocomplement(span, form=None, tol=TAU_RANK, dim=None):
    """Basis of ``{w : form(w, s) = 0 for all s in span}``.

    ``form`` must be definite; the returned rows are orthonormal under it
    (under ``-form`` when negative definite).
    """
    span = np.asarray(span, dtype=float)
    if dim is None:
        if span.ndim == 2 and span.shape[1]:
            dim = span.shape[1]
        elif form is not None:
            dim = _as_form(form, 0).dim
        else:
            raise InvalidMatrix("cannot infer ambient dimension of empty span")
    f = _as_form(form, dim)
    sign = f.definiteness(tol) if f.dim else 1
    if sign == 0:
        raise FormNotDefinite("orthogonal complement requires a definite form")
    pos = BilinearForm(sign * f.gram)
    if span.size == 0:
        return gram_schmidt(np.eye(dim), pos, tol)
    span = as_matrix(np.atleast_2d(span))
    basis = nullspace(span @ f.gram, tol)
    return gram_schmidt(basis, pos, tol)


def eigensplit_involution(t, tol=TAU_RANK, tol_abs=1e-9):
    """Split the space into the +1 and -1 eigenspaces of an involution."""
    t = as_matrix(t)
    d = t.shape[0]
    if t.shape != (d, d):
        raise InvalidMatrix(f"involution must be square, got {t.shape}")
    if np.max(np.abs(t @ t - np.eye(d)), initial=0.0) > tol_abs:
        raise NotInvolution("t @ t differs from the identity")
    if d == 0:
        return _empty_rows(0), _empty_rows(0)
    # (id +- t)/2 are projections: singular values are 0 or >= 1
    plus = row_space((np.eye(d) + t) / 2, tol, atol=0.5)
    minus = row_space((np.eye(d) - t) / 2, tol, atol=0.5)
    return np.real_if_close(plus), np.real_if_close(minus)


def _factor(form, dim):
    if form is None:
        return np.eye(dim)
    g = _as_form(form, dim).gram
    sign = 1.0 if np.trace(g) >= 0 else -1.0
    try:
        return np.linalg.cholesky(sign * g).T
    except np.linalg.LinAlgError:
        raise FormNotDefinite("principal angles need a definite form") from None


def principal_angles(a, b, form=None):
    """Principal angles (radians, descending) between two row spans."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    b = np.atleast_2d(np.asarray(b, dtype=float))
    if a.size == 0 or b.size == 0:
        return np.zeros(0)
    r = _factor(form, a.shape[1])
    return subspace_angles((a @ r.T).T, (b @ r.T).T)


def same_span(a, b, form=None, tol=TAU_SPAN):
    """True when the row spans of ``a`` and ``b`` coincide."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    ra = numerical_rank(a) if a.size else 0
    rb = numerical_rank(b) if b.size else 0
    if ra != rb:
        return False
    if ra == 0:
        return True
    return bool(np.max(principal_angles(a, b, form)) <= tol)


def intersect(a, b, tol=TAU_RANK):
    """Orthonormal rows spanning the intersection of two row spans."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    dim = a.shape[1] if a.ndim == 2 else b.shape[1]
    if a.size == 0 or b.size == 0:
        return _empty_rows(dim)
    qa = row_space(a, tol)
    qb = row_space(b, tol)
    combos = nullspace(np.vstack([qa, -qb]).T, tol)
    if combos.size == 0:
        return _empty_rows(dim)
    vecs = combos[:, : qa.shape[0]] @ qa
    return row_space(vecs, tol)


def span_residual(vectors, basis, form=None):
    """Largest distance from a vector in ``vectors`` to the span of ``basis``.

    ``basis`` need not be orthonormal; distances are measured in ``form``
    (Euclidean when omitted).
    """
    vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
    if vectors.size == 0:
        return 0.0
    dim = vectors.shape[1]
    f = _as_form(form, dim)
    basis = np.asarray(basis, dtype=float)
    if basis.size == 0:
        return float(np.max(np.sqrt(np.abs(np.einsum("ij,jk,ik->i", vectors, f.gram, vectors)))))
    q = gram_schmidt(basis, f)
    coeffs = vectors @ f.gram @ q.T
    rest = vectors - coeffs @ q
    return float(np.max(np.sqrt(np.abs(np.einsum("ij,jk,ik->i", rest, f.gram, rest)))))
