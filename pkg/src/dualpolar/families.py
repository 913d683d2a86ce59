"""Matrix realizations of the classical real forms.

Every algebra is realized so that ``X -> -X^H`` preserves it; that map is
then the Cartan involution, and for the signature families it coincides
with ``Ad(I_{p,q})``.  Signature matrices put the ``-1`` entries first.

Quaternionic algebras live in ``gl(2n, C)`` with interleaved coordinates:
quaternionic coordinate ``a`` occupies complex indices ``2a, 2a + 1`` and
the structure map is ``v -> J conj(v)`` with ``J = I_n (x) [[0, 1], [-1, 0]]``.
"""
import numpy as np

from . import linalg
from .cartan import cartan_from_star
from .errors import DimensionError
from .liealg import _realify, build_algebra

__all__ = [
    "signature_matrix",
    "quaternionic_j",
    "so_matrices",
    "su_matrices",
    "sp_matrices",
    "sl_real_matrices",
    "make_so",
    "make_su",
    "make_sp",
    "make_sl",
    "trace_form_constant",
]


def signature_matrix(k, n):
    """``I_{k, n-k} = diag(-1 (k times), +1 (n-k times))``."""
    if not 0 <= k <= n:
        raise DimensionError(f"need 0 <= k <= n, got k={k}, n={n}")
    return np.diag([-1.0] * k + [1.0] * (n - k))


def quaternionic_j(n):
    return np.kron(np.eye(n), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def _select_basis(candidates, star):
    """Greedy independent selection, k-type elements first then p-type.

    Candidates are split into the +1 and -1 parts of ``star`` and each kept
    element is rescaled to unit max-entry.
    """
    plus, minus = [], []
    for x in candidates:
        sx = star(x)
        plus.append((x + sx) / 2)
        minus.append((x - sx) / 2)
    chosen = []
    rank = 0
    for x in plus + minus:
        m = np.max(np.abs(x))
        if m < 1e-12:
            continue
        trial = chosen + [x / m]
        r = linalg.numerical_rank(_realify(np.array(trial)))
        if r > rank:
            chosen.append(x / m)
            rank = r
    return np.array(chosen)


def _units(n, complex_units):
    out = []
    for a in range(n):
        for b in range(n):
            e = np.zeros((n, n), dtype=complex)
            e[a, b] = 1.0
            out.append(e)
            if complex_units:
                out.append(1j * e)
    return out


def _star(x):
    return -x.conj().T


def so_matrices(p, q):
    """Basis of ``so(p, q) = {X real : X^T I + I X = 0}``."""
    n = p + q
    s = signature_matrix(p, n)
    proj = [(e - s @ e.T @ s) / 2 for e in _units(n, False)]
    return _select_basis(proj, _star)


def su_matrices(p, q):
    """Basis of ``su(p, q) = {X : X^H I + I X = 0, tr X = 0}``."""
    n = p + q
    s = signature_matrix(p, n)
    proj = []
    for e in _units(n, True):
        x = (e - s @ e.conj().T @ s) / 2
        proj.append(x - np.trace(x) / n * np.eye(n))
    return _select_basis(proj, _star)


def u_matrices(p, q):
    """Basis of ``u(p, q)`` (``su(p, q)`` plus the center ``i I``)."""
    n = p + q
    return np.concatenate([su_matrices(p, q), [1j * np.eye(n)]]) if n > 1 else np.array([[[1j]]])


def sp_matrices(p, q):
    """Basis of ``sp(p, q)`` inside ``gl(2(p+q), C)``."""
    n = p + q
    s = np.kron(signature_matrix(p, n), np.eye(2))
    j = quaternionic_j(n)
    jinv = j.T
    proj = []
    for e in _units(2 * n, True):
        x = (e - s @ e.conj().T @ s) / 2
        x = (x + j @ x.conj() @ jinv) / 2
        proj.append(x)
    return _select_basis(proj, _star)


def sl_real_matrices(n):
    """Basis of ``sl(n, R)``."""
    proj = [e - np.trace(e) / n * np.eye(n) for e in _units(n, False)]
    return _select_basis(proj, _star)


def _name(prefix, p, q):
    return f"{prefix}({p + q})" if min(p, q) == 0 else f"{prefix}({p},{q})"


def _check(p, q, least):
    if p < 0 or q < 0 or p + q < least:
        raise DimensionError(f"invalid signature ({p}, {q})")


def make_so(p, q):
    """``so(p, q)`` with its Cartan decomposition ``theta = Ad(I_{p,q})``."""
    _check(p, q, 2)
    alg = build_algebra(_name("so", p, q), so_matrices(p, q))
    return alg, cartan_from_star(alg)


def make_su(p, q):
    _check(p, q, 2)
    alg = build_algebra(_name("su", p, q), su_matrices(p, q))
    return alg, cartan_from_star(alg)


def make_sp(p, q):
    _check(p, q, 1)
    alg = build_algebra(_name("sp", p, q), sp_matrices(p, q))
    return alg, cartan_from_star(alg)


def make_sl(n):
    _check(n, 0, 2)
    alg = build_algebra(f"sl({n},R)", sl_real_matrices(n))
    return alg, cartan_from_star(alg)


def trace_form_constant(family, n):
    """Classical ratio ``B(X, Y) / tr(XY)`` for the defining realization."""
    return {"so": n - 2, "su": 2 * n, "sl": 2 * n, "sp": 2 * n + 2}[family]
