"""Catalog of classical real forms, subgroup families and Hermann actions.

Entries are addressed by string keys such as ``"thm8.1/i/k=2,n=4,L=so2"``.
Expected polar flags come from the classification theorems for rank-one
spaces; cohomogeneities are closed-form counts where one is available and
are tagged with their source in ``CatalogEntry.sources``.
"""
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np

from . import linalg
from .actions import linear_representation
from .cartan import fixed_point_algebra
from .errors import DimensionError, NotCommuting, Unsupported
from .families import (
    make_so,
    make_sp,
    make_su,
    make_sl,
    signature_matrix,
    so_matrices,
    sp_matrices,
    su_matrices,
    u_matrices,
)
from .liealg import Subspace, conjugation_matrix

DESK_N = 4

# Action of so(3) on harmonic cubics in x, y, z (basis x^3 - 3xy^2,
# 3x^2y - y^3, z(x^2 - y^2), xyz, x(4z^2 - x^2 - y^2), y(4z^2 - x^2 - y^2),
# z(2z^2 - 3x^2 - 3y^2)); entries are 4 times the generator entries.
_SPIN3_X4 = np.array([
    [[0, 0, 0, 1, 0, 0, 0], [0, 0, -2, 0, 0, 0, 0], [0, 12, 0, 0, 0, 20, 0], [-24, 0, 0, 0, -40, 0, 0],
     [0, 0, 0, 1, 0, 0, 0], [0, 0, -2, 0, 0, 0, -12], [0, 0, 0, 0, 0, 8, 0]],
    [[0, 0, 2, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0, 0], [-12, 0, 0, 0, 20, 0, 0], [0, -24, 0, 0, 0, 40, 0],
     [0, 0, -2, 0, 0, 0, 12], [0, 0, 0, -1, 0, 0, 0], [0, 0, 0, 0, -8, 0, 0]],
    [[0, -12, 0, 0, 0, 0, 0], [12, 0, 0, 0, 0, 0, 0], [0, 0, 0, -4, 0, 0, 0], [0, 0, 16, 0, 0, 0, 0],
     [0, 0, 0, 0, 0, -4, 0], [0, 0, 0, 0, 4, 0, 0], [0, 0, 0, 0, 0, 0, 0]],
], dtype=float)
# Fischer inner product of the basis above (so(3)-invariant)
_SPIN3_GRAM = np.diag([24.0, 24.0, 4.0, 1.0, 40.0, 40.0, 60.0])


def spin3_generators():
    """Generators ``X_1, X_2, X_3`` with ``[X_1, X_2] = X_3`` (cyclic) on R^7."""
    return _SPIN3_X4 / 4


def spin3_on_R7():
    """The irreducible 7-dimensional representation of so(3)."""
    return linear_representation(spin3_generators(), _SPIN3_GRAM)


def spin3_so7():
    """The same generators as antisymmetric matrices in an orthonormal basis."""
    r = np.sqrt(np.diag(_SPIN3_GRAM))
    return np.array([np.diag(r) @ x @ np.diag(1 / r) for x in spin3_generators()])


@lru_cache(maxsize=None)
def real_form(family, p, q=0):
    """Cached ``(algebra, decomposition)`` for a classical family."""
    if family == "so":
        return make_so(p, q)
    if family == "su":
        return make_su(p, q)
    if family == "sp":
        return make_sp(p, q)
    if family == "sl":
        return make_sl(p)
    raise Unsupported(f"unknown family {family!r}")


_ALG_RE = re.compile(r"^(so|su|sp|sl)\((\d+)(?:,(\d+|R))?\)$")


def algebra_by_key(key):
    """Resolve names like ``so(1,3)``, ``su(3)``, ``sl(2,R)`` or ``sl2r``."""
    key = key.replace(" ", "")
    if key.lower() == "sl2r":
        return real_form("sl", 2)
    m = _ALG_RE.match(key)
    if not m:
        raise Unsupported(f"unknown algebra key {key!r}")
    fam, a, b = m.group(1), int(m.group(2)), m.group(3)
    if fam == "sl":
        return real_form("sl", a)
    if b is None:
        return real_form(fam, 0, a)
    return real_form(fam, a, int(b))


def embed(mat, offset, size):
    out = np.zeros((size, size), dtype=complex)
    k = mat.shape[0]
    out[offset:offset + k, offset:offset + k] = mat
    return out


def _traceless(mats):
    """Basis of real combinations of ``mats`` with zero trace."""
    mats = np.asarray(mats, dtype=complex)
    if mats.size == 0:
        return mats
    tr = np.trace(mats, axis1=1, axis2=2)
    combos = linalg.nullspace(np.vstack([tr.real, tr.imag]), atol=1e-12)
    return np.tensordot(combos, mats, axes=1)


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    key: str
    algebra: object
    decomposition: object
    subalgebra: Subspace
    expected: dict
    sources: dict = field(default_factory=dict)
    description: str = ""

    def to_json(self):
        return {
            "key": self.key,
            "algebra": self.algebra.name,
            "description": self.description,
            "subalgebra": self.subalgebra.to_json(),
            "expected": self.expected,
            "sources": self.sources,
        }


def _expected(polar, cohomogeneity=None, hyperpolar=None, orbit=None, polar_src="literature",
              coh_src="closed-form", hyp_src="derived"):
    exp = {"polar": polar, "cohomogeneity": cohomogeneity, "hyperpolar": hyperpolar, "orbit": orbit}
    src = {"polar": polar_src, "cohomogeneity": coh_src if cohomogeneity is not None else None,
           "hyperpolar": hyp_src if hyperpolar is not None else None}
    return exp, src


def _rank_one_hyperpolar(coh):
    # sections of dimension >= 2 in a rank-one space are curved
    return coh is not None and coh <= 1


# -- real hyperbolic space ---------------------------------------------------

def _so_spec(spec, m):
    """Matrices of ``L`` inside ``so(m)``, its polar flag and cohomogeneity on R^m."""
    if spec in ("0", "", "none"):
        return [], True, m
    mats, polar, used, coh = [], True, 0, 0
    for part in spec.split("+"):
        if part == "spin3":
            gens, size, c, pol = list(spin3_so7()), 7, 4, False
        elif re.fullmatch(r"so\d+", part):
            j = int(part[2:])
            gens, size, c, pol = list(so_matrices(0, j)) if j >= 2 else [], j, (1 if j >= 2 else j), True
        elif re.fullmatch(r"t\d+", part):
            j = int(part[1:])
            gens, size, c, pol = [], 2 * j, j, True
            for a in range(j):
                x = np.zeros((2 * j, 2 * j))
                x[2 * a, 2 * a + 1], x[2 * a + 1, 2 * a] = -1.0, 1.0
                gens.append(x)
        else:
            raise Unsupported(f"unknown so-block spec {part!r}")
        if used + size > m:
            raise DimensionError(f"L spec {spec!r} does not fit in so({m})")
        mats += [embed(np.asarray(x, dtype=complex), used, m) for x in gens]
        used += size
        coh += c
        polar = polar and pol
    return mats, polar, coh + (m - used)


def embed_theorem_8_1(k, n, L="0"):
    """``so(1, k) + L`` inside ``so(1, n)``, ``L`` acting on the last ``n - k`` coordinates."""
    if not 1 <= k <= n:
        raise DimensionError(f"need 1 <= k <= n, got k={k}, n={n}")
    alg, dec = real_form("so", 1, n)
    lmats, lpolar, lcoh = _so_spec(L, n - k)
    mats = [embed(x, 0, n + 1) for x in so_matrices(1, k)]
    mats += [embed(x, k + 1, n + 1) for x in lmats]
    sub = Subspace.from_matrices(alg, np.array(mats))
    exp, src = _expected(lpolar, lcoh, _rank_one_hyperpolar(lcoh) if lpolar else False, f"H^{k}")
    return CatalogEntry(f"thm8.1/i/k={k},n={n},L={L}", alg, dec, sub, exp, src,
                        f"so(1,{k}) + {L} in so(1,{n})")


def embed_theorem_8_1_fixed(n, L):
    """A subalgebra ``L`` of ``so(n)`` (fixed point case)."""
    alg, dec = real_form("so", 1, n)
    lmats, lpolar, lcoh = _so_spec(L, n)
    if not lmats:
        raise DimensionError("the fixed point case needs a nonzero L")
    sub = Subspace.from_matrices(alg, np.array([embed(x, 1, n + 1) for x in lmats]))
    exp, src = _expected(lpolar, lcoh, _rank_one_hyperpolar(lcoh) if lpolar else False, "point")
    return CatalogEntry(f"thm8.1/ii/n={n},L={L}", alg, dec, sub, exp, src, f"{L} in so({n}) in so(1,{n})")


# -- complex hyperbolic space ------------------------------------------------

def _sym_alt_basis(j, symmetric):
    out = []
    for a in range(j):
        for b in range(a, j):
            if a == b and not symmetric:
                continue
            x = np.zeros((j, j))
            if a == b:
                x[a, a] = 1.0
            else:
                x[a, b] = 1 / np.sqrt(2)
                x[b, a] = (1 if symmetric else -1) / np.sqrt(2)
            out.append(x)
    return out


def _rep_on_basis(basis, action):
    """Matrices of ``X -> action(X)`` in an orthonormal basis of matrices."""
    flat = np.array([b.ravel() for b in basis])
    return np.array([[flat @ action(b).ravel() for b in basis]]).squeeze(0).T


def _hss_spec(spec, m):
    """Image in ``u(m)`` of ``U(1) L`` for an HSS-induced action on C^m, and its rank."""
    if spec in ("0", "", "none"):
        if m:
            raise DimensionError("trivial L needs n = k")
        return [], 0
    mats, used, rank = [], 0, 0
    for part in spec.split("+"):
        if part.lower() in ("e6", "e7"):
            raise Unsupported(f"exceptional Hermitian symmetric space {part!r} is not supported")
        if re.fullmatch(r"u\d+", part):
            j = int(part[1:])
            gens, size, r = list(u_matrices(0, j)), j, 1
        elif re.fullmatch(r"t\d+", part):
            j = int(part[1:])
            gens, size, r = [1j * np.diag(np.eye(j)[a]) for a in range(j)], j, j
        elif re.fullmatch(r"q\d+", part):
            j = int(part[1:])
            gens = [x.astype(complex) for x in (so_matrices(0, j) if j >= 2 else [])] + [1j * np.eye(j)]
            size, r = j, min(2, j)
        elif re.fullmatch(r"gr\d+x\d+", part):
            a, b = map(int, part[2:].split("x"))
            gens = [np.kron(x, np.eye(b)) for x in u_matrices(0, a)]
            gens += [-np.kron(np.eye(a), y.T) for y in u_matrices(0, b)]
            size, r = a * b, min(a, b)
        elif re.fullmatch(r"(sym|alt)\d+", part):
            sym = part.startswith("sym")
            j = int(part[3:])
            basis = _sym_alt_basis(j, sym)
            gens = [_rep_on_basis(basis, lambda z, x=x: x @ z + z @ x.T) for x in u_matrices(0, j)]
            size, r = len(basis), (j if sym else j // 2)
        else:
            raise Unsupported(f"unknown Hermitian block spec {part!r}")
        if used + size > m:
            raise DimensionError(f"L spec {spec!r} does not fit in C^{m}")
        mats += [embed(np.asarray(x, dtype=complex), used, m) for x in gens]
        used += size
        rank += r
    if used != m:
        raise DimensionError(f"L spec {spec!r} acts on C^{used}, expected C^{m}")
    return mats, rank


def embed_theorem_9_1(variant, k=None, n=2, L="0"):
    """Subalgebras of ``su(1, n)`` from the complex hyperbolic classification."""
    if n > DESK_N:
        raise Unsupported(f"n={n} is beyond desk scale")
    alg, dec = real_form("su", 1, n)
    size = n + 1
    if variant in ("i", "ii"):
        if k is None or not 1 <= k <= n:
            raise DimensionError(f"need 1 <= k <= n, got k={k}, n={n}")
        lmats, lrank = _hss_spec(L, n - k)
        if variant == "i":
            mats = [embed(x, 0, size) for x in u_matrices(1, k)]
            orbit, extra = f"CH^{k}", 0
        else:
            mats = [embed(x.astype(complex), 0, size) for x in so_matrices(1, k)]
            mats.append(embed(1j * np.eye(k + 1), 0, size))
            orbit, extra = f"H^{k}", 1
        mats += [embed(x, k + 1, size) for x in lmats]
        key = f"thm9.1/{variant}/k={k},n={n},L={L}"
        coh = lrank + extra
    elif variant == "iii":
        lmats, lrank = _hss_spec(L, n)
        mats = [embed(np.array([[1j]]), 0, size)] + [embed(x, 1, size) for x in lmats]
        key, orbit, coh = f"thm9.1/iii/n={n},L={L}", "point", lrank
    else:
        raise Unsupported(f"unknown variant {variant!r}")
    sub = Subspace.from_matrices(alg, _traceless(mats))
    exp, src = _expected(True, coh, _rank_one_hyperpolar(coh), orbit)
    return CatalogEntry(key, alg, dec, sub, exp, src, f"Theorem 9.1 ({variant}) type subgroup of SU(1,{n})")


# -- quaternionic hyperbolic space -------------------------------------------

def _interleave_complex(a):
    """``A (x) E11 + conj(A) (x) E22`` in interleaved coordinates."""
    k = a.shape[0]
    out = np.zeros((2 * k, 2 * k), dtype=complex)
    out[0::2, 0::2] = a
    out[1::2, 1::2] = a.conj()
    return out


def _parse_blocks(blocks):
    if blocks in ("", "0", "none", None):
        return ()
    if isinstance(blocks, (tuple, list)):
        return tuple(int(b) for b in blocks)
    return tuple(int(b) for b in str(blocks).split("+"))


def _blocks_str(blocks):
    return "+".join(map(str, blocks)) if blocks else "none"


def embed_theorem_10_1(variant, k=None, n=2, blocks=()):
    """Subalgebras of ``sp(1, n)`` from the quaternionic hyperbolic classification.

    ``blocks`` lists the sizes ``n_1, ..., n_v`` of the ``Sp(n_i)`` factors;
    the quaternion-Kahler factor ``L`` is restricted to such blocks.
    """
    if n > 3:
        raise Unsupported(f"n={n} is beyond desk scale")
    blocks = _parse_blocks(blocks)
    alg, dec = real_form("sp", 1, n)
    size = 2 * (n + 1)
    if variant == "iv":
        start, mats, orbit = 1, [embed(x, 0, size) for x in sp_matrices(0, 1)], "point"
        key = f"thm10.1/iv/n={n},blocks={_blocks_str(blocks)}"
    else:
        if k is None or not 1 <= k <= n:
            raise DimensionError(f"need 1 <= k <= n, got k={k}, n={n}")
        start = k + 1
        key = f"thm10.1/{variant}/k={k},n={n},blocks={_blocks_str(blocks)}"
        if variant == "i":
            mats, orbit = [embed(x, 0, size) for x in sp_matrices(1, k)], f"HH^{k}"
        elif variant == "ii":
            mats, orbit = [embed(_interleave_complex(x), 0, size) for x in u_matrices(1, k)], f"CH^{k}"
        elif variant == "iii":
            mats = [embed(np.kron(x, np.eye(2)).astype(complex), 0, size) for x in so_matrices(1, k)]
            mats += [embed(np.kron(np.eye(k + 1), s), 0, size) for s in su_matrices(0, 2)]
            orbit = f"H^{k}"
        else:
            raise Unsupported(f"unknown variant {variant!r}")
    if start - 1 + sum(blocks) != n:
        raise DimensionError(f"block sizes {blocks} do not fill sp(1,{n})")
    off = start
    for b in blocks:
        mats += [embed(x, 2 * off, size) for x in sp_matrices(0, b)]
        off += b
    sub = Subspace.from_matrices(alg, np.array(mats))
    coh = len(blocks) if variant == "i" else None
    exp, src = _expected(True, coh, _rank_one_hyperpolar(coh) if coh is not None else None, orbit)
    return CatalogEntry(key, alg, dec, sub, exp, src, f"Theorem 10.1 ({variant}) type subgroup of Sp(1,{n})")


# -- isotropy, transitive and Hermann entries --------------------------------

def _real_rank(family, p, q):
    return min(p, q)


def isotropy_entry(family, p, q):
    alg, dec = real_form(family, p, q)
    rank = _real_rank(family, p, q)
    exp, src = _expected(True, rank, True, "point", polar_src="derived", coh_src="real rank")
    return CatalogEntry(f"isotropy/{alg.name}", alg, dec, dec.k, exp, src, f"isotropy action on {alg.name}/k")


def transitive_entry(family, p, q):
    alg, dec = real_form(family, p, q)
    exp, src = _expected(True, 0, True, "whole space", polar_src="derived")
    return CatalogEntry(f"transitive/{alg.name}", alg, dec, Subspace.full(alg), exp, src, "transitive action")


def example_7_1_conjugator(n, p, q, r):
    """Signed permutation ``g`` in SO(n) with ``g I_q g^-1`` having r of its -1's inside the first p slots."""
    if not 0 <= r <= min(p, q) or p + q - r > n:
        raise DimensionError(f"r={r} is not admissible for n={n}, p={p}, q={q}")
    shift = p - r
    g = np.zeros((n, n))
    for i in range(n):
        g[(i + shift) % n, i] = 1.0
    if np.linalg.det(g) < 0:
        g[:, -1] *= -1
    return g


def hermann_entry(p, q_sig, q, r):
    """Hermann subalgebra ``so(r, q - r) + so(p - r, n - p - q + r)`` of ``so(p, n - p)``."""
    n = p + q_sig
    alg, dec = real_form("so", p, q_sig)
    g = example_7_1_conjugator(n, p, q, r)
    a = g @ signature_matrix(q, n) @ g.T
    sigma = conjugation_matrix(alg, a)
    sub = fixed_point_algebra(sigma, alg)
    exp, src = _expected(True, None, True, None, polar_src="derived", hyp_src="Hermann action")
    return CatalogEntry(f"hermann/{alg.name}/q={q},r={r}", alg, dec, sub, exp, src,
                        f"so({r},{q - r}) + so({p - r},{n - p - q + r}) in {alg.name}")


# -- Example 7.1 --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Example71Entry:
    h_star: Subspace
    k_star: Subspace
    intersection: Subspace
    r: int
    isotropy_dim: int


def example_7_1_entry(m, p, q, g_conj=None):
    """Isotropy algebra of the ``SO(q) x SO(n - q)`` orbit through ``[g^-1]`` on the Grassmannian.

    ``r`` counts the common ``-1`` directions of ``A_g = g I_q g^-1`` and
    ``B = I_p``.
    """
    n = 2 * m + 1
    if not (1 <= p <= m and 1 <= q <= m):
        raise DimensionError(f"need 1 <= p, q <= m, got m={m}, p={p}, q={q}")
    g = np.eye(n) if g_conj is None else np.asarray(g_conj, dtype=float)
    a = g @ signature_matrix(q, n) @ np.linalg.inv(g)
    b = signature_matrix(p, n)
    if np.max(np.abs(a @ b - b @ a)) > 1e-9:
        raise NotCommuting("A_g and B do not commute")
    both_minus = linalg.nullspace(np.vstack([a + np.eye(n), b + np.eye(n)]), atol=1e-9)
    r = both_minus.shape[0]
    alg, _ = real_form("so", 0, n)
    h_star = fixed_point_algebra(conjugation_matrix(alg, a), alg)
    k_star = fixed_point_algebra(conjugation_matrix(alg, b), alg)
    rows = linalg.intersect(h_star.coeffs, k_star.coeffs)
    inter = Subspace(alg, rows) if rows.size else Subspace.zero(alg)
    return Example71Entry(h_star, k_star, inter, r, inter.dim)


def _so_dim(j):
    return j * (j - 1) // 2


def example_7_1_closed_form(n, p, q, r):
    """Dimension of the isotropy algebra from the case list of the example."""
    if 1 <= r < min(p, q):
        parts = (r, p - r, q - r, n - p - q + r)
    elif r == 0:
        parts = (p, q, n - p - q)
    elif r == p < q:
        parts = (p, q - p, n - q)
    elif r == q < p:
        parts = (q, p - q, n - p)
    elif r == p == q:
        parts = (p, n - p)
    else:
        raise DimensionError(f"r={r} outside 0..min(p, q)")
    return sum(_so_dim(j) for j in parts)


@dataclass(frozen=True)
class Table71Row:
    r: int
    computed: int
    closed_form: int

    @property
    def match(self):
        return self.computed == self.closed_form


def example_7_1_table(m, p, q):
    n = 2 * m + 1
    rows = []
    for r in range(min(p, q) + 1):
        entry = example_7_1_entry(m, p, q, example_7_1_conjugator(n, p, q, r))
        if entry.r != r:
            raise DimensionError(f"conjugator for r={r} realized r={entry.r}")
        rows.append(Table71Row(r, entry.isotropy_dim, example_7_1_closed_form(n, p, q, r)))
    return rows


def example_7_1_parameters(max_n=9):
    """All ``(m, p, q)`` with ``n = 2m + 1 <= max_n``."""
    out = []
    for m in range(1, (max_n - 1) // 2 + 1):
        for p in range(1, m + 1):
            for q in range(1, m + 1):
                out.append((m, p, q))
    return out


# -- registry -----------------------------------------------------------------

_KEY_PATTERNS = [
    (re.compile(r"^thm8\.1/i/k=(\d+),n=(\d+),L=(.+)$"),
     lambda m: embed_theorem_8_1(int(m[1]), int(m[2]), m[3])),
    (re.compile(r"^thm8\.1/ii/n=(\d+),L=(.+)$"),
     lambda m: embed_theorem_8_1_fixed(int(m[1]), m[2])),
    (re.compile(r"^thm9\.1/(i|ii)/k=(\d+),n=(\d+),L=(.+)$"),
     lambda m: embed_theorem_9_1(m[1], int(m[2]), int(m[3]), m[4])),
    (re.compile(r"^thm9\.1/iii/n=(\d+),L=(.+)$"),
     lambda m: embed_theorem_9_1("iii", None, int(m[1]), m[2])),
    (re.compile(r"^thm10\.1/(i|ii|iii)/k=(\d+),n=(\d+),blocks=(.+)$"),
     lambda m: embed_theorem_10_1(m[1], int(m[2]), int(m[3]), m[4])),
    (re.compile(r"^thm10\.1/iv/n=(\d+),blocks=(.+)$"),
     lambda m: embed_theorem_10_1("iv", None, int(m[1]), m[2])),
    (re.compile(r"^(isotropy|transitive)/(so|su|sp)\((\d+),(\d+)\)$"),
     lambda m: (isotropy_entry if m[1] == "isotropy" else transitive_entry)(m[2], int(m[3]), int(m[4]))),
    (re.compile(r"^hermann/so\((\d+),(\d+)\)/q=(\d+),r=(\d+)$"),
     lambda m: hermann_entry(int(m[1]), int(m[2]), int(m[3]), int(m[4]))),
]

ALIASES = {
    "torus/su(1,2)": "thm9.1/iii/n=2,L=t2",
    "spin3/so(1,8)": "thm8.1/i/k=1,n=8,L=spin3",
    "hermann/G2(R5)": "hermann/so(2,3)/q=2,r=2",
}

DEFAULT_KEYS = (
    "isotropy/so(1,3)",
    "isotropy/su(1,2)",
    "isotropy/sp(1,1)",
    "isotropy/so(2,3)",
    "transitive/so(1,3)",
    "thm8.1/i/k=1,n=3,L=0",
    "thm8.1/i/k=2,n=4,L=so2",
    "thm8.1/i/k=3,n=3,L=0",
    "thm8.1/i/k=1,n=5,L=t2",
    "thm8.1/i/k=1,n=4,L=so3",
    "thm8.1/ii/n=3,L=so2",
    "thm8.1/ii/n=4,L=t2",
    "thm8.1/i/k=1,n=8,L=spin3",
    "thm9.1/i/k=1,n=2,L=u1",
    "thm9.1/i/k=1,n=3,L=u2",
    "thm9.1/i/k=1,n=3,L=q2",
    "thm9.1/ii/k=2,n=2,L=0",
    "thm9.1/ii/k=1,n=2,L=u1",
    "thm9.1/iii/n=2,L=t2",
    "thm9.1/iii/n=3,L=u1+u2",
    "thm10.1/i/k=1,n=2,blocks=1",
    "thm10.1/i/k=1,n=3,blocks=1+1",
    "thm10.1/ii/k=1,n=2,blocks=1",
    "thm10.1/iii/k=1,n=2,blocks=1",
    "thm10.1/iv/n=2,blocks=1+1",
    "hermann/so(2,3)/q=2,r=2",
    "hermann/so(2,3)/q=2,r=1",
    "hermann/so(2,3)/q=2,r=0",
    "hermann/so(1,4)/q=2,r=1",
)


def get_entry(key):
    """Build (once) the catalog entry addressed by ``key`` or one of its aliases."""
    return _build_entry(ALIASES.get(key, key).replace(" ", ""))


@lru_cache(maxsize=None)
def _build_entry(key):
    for pattern, build in _KEY_PATTERNS:
        m = pattern.match(key)
        if m:
            return build(m)
    raise Unsupported(f"unknown catalog key {key!r}")


def catalog_keys():
    return list(DEFAULT_KEYS)


def iter_entries(keys=DEFAULT_KEYS):
    for key in keys:
        yield get_entry(key)
