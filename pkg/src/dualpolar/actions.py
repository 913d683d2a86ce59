"""Slice representations and tangent-space polarity checks.

For a theta-stable subalgebra ``h`` the orbit through the base point has
tangent space ``h & p``; the isotropy algebra ``h & k`` acts on the normal
space ``(h & p)^perp`` in ``p``.  Cohomogeneity, polarity and flatness of
sections are all decided on that linear action:

* the normal space ``s`` at a principal point is the only section candidate;
* polarity of the representation is ``<[x, w], u> = 0`` for ``x`` in the
  actors and ``w, u`` in ``s``;
* polarity of the action on the symmetric space additionally needs ``s`` to
  be a Lie triple system.

All arrays inside a :class:`SliceRepresentation` use module coordinates
that are orthonormal for the module inner product.
"""
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import linalg
from .cartan import intersections, triple_residual
from .errors import NotPolar, NotThetaStable, SamplingFailed
from .liealg import TAU_CLOSE, Subspace
from .linalg import TAU_RANK, BilinearForm

N_SAMPLES = 20
TAU_ORTH = 1e-7
TAU_REFUTE = 1e-3
ACTOR_FLOOR = 1e-10


@dataclass(frozen=True)
class Tolerances:
    rank: float = TAU_RANK
    close: float = TAU_CLOSE
    orth: float = TAU_ORTH
    refute: float = TAU_REFUTE
    span: float = linalg.TAU_SPAN

    def __post_init__(self):
        for name, value in self.as_dict().items():
            if not value > 0:
                raise ValueError(f"tolerance {name} must be positive, got {value}")

    def as_dict(self):
        return {"rank": self.rank, "close": self.close, "orth": self.orth,
                "refute": self.refute, "span": self.span}


DEFAULT_TOLS = Tolerances()


class Verdict(str, Enum):
    VERIFIED = "Verified"
    REFUTED = "RefutedBySliceRep"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True, eq=False)
class SliceRepresentation:
    """Linear action of ``actors`` on a module with an inner product.

    ``actor_matrices`` has shape ``(a, m, m)`` in the coordinates in which
    ``inner`` is given.  When the representation comes from a decomposition,
    ``actors`` is ``h & k`` and ``module`` the normal space, both as
    subspaces of the ambient algebra, and module coordinates refer to the
    rows of ``module``.
    """

    actor_matrices: np.ndarray
    inner: BilinearForm
    actors: Subspace = None
    module: Subspace = None
    decomposition: object = field(default=None, repr=False)
    closure_residual: float = 0.0

    @property
    def module_dim(self):
        return self.inner.dim

    @property
    def n_actors(self):
        return self.actor_matrices.shape[0]

    def orthonormal_actors(self):
        """Actor matrices in orthonormal coordinates, scaled to unit Frobenius norm."""
        r = np.linalg.cholesky(self.inner.gram).T if self.module_dim else np.eye(0)
        mats = [r @ a @ np.linalg.inv(r) for a in self.actor_matrices] if self.module_dim else []
        norms = [np.linalg.norm(a) for a in mats]
        # actors acting trivially carry only roundoff; rescaling them would
        # turn that noise into spurious orbit directions
        floor = max(ACTOR_FLOOR, TAU_RANK * max(norms, default=0.0))
        out = [a / s for a, s in zip(mats, norms) if s > floor]
        m = self.module_dim
        return np.array(out) if out else np.zeros((0, m, m)), r

    def lift(self, coords):
        """Subspace of the ambient algebra spanned by module-coordinate rows."""
        if self.module is None:
            raise ValueError("representation is not attached to an algebra")
        coords = np.atleast_2d(np.asarray(coords, dtype=float))
        if coords.size == 0:
            return Subspace.zero(self.module.parent)
        return Subspace(self.module.parent, coords @ self.module.coeffs)


def linear_representation(actor_matrices, inner=None):
    """A representation given directly by its matrices."""
    mats = np.asarray(actor_matrices, dtype=float)
    if mats.ndim == 2:
        mats = mats[None]
    m = mats.shape[-1]
    form = BilinearForm(np.eye(m)) if inner is None else (inner if isinstance(inner, BilinearForm) else BilinearForm(inner))
    return SliceRepresentation(mats, form)


def slice_representation(h, dec, tol_rank=TAU_RANK):
    """Action of ``h & k`` on the orthogonal complement of ``h & p`` in ``p``."""
    parts = intersections(h, dec, tol_rank)
    if not parts.canonical:
        raise NotThetaStable(f"subalgebra is not theta-stable (defect {parts.defect})", defect=parts.defect)
    alg = dec.algebra
    g = dec.b_theta.gram
    p_rows = dec.p.coeffs
    hp = parts.hp.coeffs
    if dec.p.dim == 0:
        module_rows = np.zeros((0, alg.dim))
    else:
        # complement inside p, in p-coordinates (p rows are b_theta-orthonormal)
        local = hp @ g @ p_rows.T if parts.hp.dim else np.zeros((0, dec.p.dim))
        comp = linalg.orthocomplement(local, np.eye(dec.p.dim), tol_rank, dim=dec.p.dim)
        module_rows = comp @ p_rows
    module = Subspace(alg, module_rows)
    m = module.dim
    actors = parts.hk
    if actors.dim == 0 or m == 0:
        mats = np.zeros((actors.dim, m, m))
        resid = 0.0
    else:
        xs = linalg.gram_schmidt(actors.coeffs, dec.b_theta)
        images = alg.bracket(xs[:, None, :], module_rows[None, :, :])
        mats = np.einsum("ajd,de,ie->aij", images, g, module_rows, optimize=True)
        back = np.einsum("aij,id->ajd", mats, module_rows)
        resid = float(np.max(np.abs(back - images), initial=0.0))
    return SliceRepresentation(mats, BilinearForm(np.eye(m)), actors, module, dec, resid)


def _orbit_tangents(mats, v):
    """Columns ``A_x v`` (shape ``(m, a)``)."""
    return (mats @ v).T


def orbit_dimension(rep, v, tol=TAU_RANK):
    """Dimension of the orbit through ``v`` (module coordinates)."""
    mats, r = rep.orthonormal_actors()
    v = r @ np.asarray(v, dtype=float)
    return _orbit_dim(mats, v, tol)


def _orbit_dim(mats, v, tol):
    if mats.shape[0] == 0 or not np.any(v):
        return 0
    t = _orbit_tangents(mats, v)
    return linalg.numerical_rank(t, tol, atol=tol * np.linalg.norm(v))


@dataclass(frozen=True)
class OrbitSample:
    seed: int
    n_samples: int
    points: np.ndarray
    orbit_dims: tuple

    @property
    def principal_orbit_dim(self):
        return max(self.orbit_dims) if self.orbit_dims else 0

    def principal_points(self):
        top = self.principal_orbit_dim
        return [p for p, d in zip(self.points, self.orbit_dims) if d == top]


def sample_orbits(rep, seed=0, n_samples=N_SAMPLES, tol=TAU_RANK):
    """Orbit dimensions at ``n_samples`` standard-normal points (orthonormal coordinates)."""
    mats, _ = rep.orthonormal_actors()
    m = rep.module_dim
    rng = np.random.default_rng(seed)
    points = rng.standard_normal((n_samples, m))
    dims = tuple(_orbit_dim(mats, v, tol) for v in points) if m else (0,) * n_samples
    return OrbitSample(seed, n_samples, points, dims)


def cohomogeneity(rep, seed=0, n_samples=N_SAMPLES, tol=TAU_RANK):
    return rep.module_dim - sample_orbits(rep, seed, n_samples, tol).principal_orbit_dim


@dataclass(frozen=True)
class SectionCandidate:
    """Normal space at a principal point, in orthonormal module coordinates."""

    coords: np.ndarray
    point: np.ndarray
    orbit_dim: int

    @property
    def dim(self):
        return self.coords.shape[0]


def _normal_space(mats, v, tol):
    m = v.shape[0]
    if mats.shape[0] == 0 or not np.any(v):
        return np.eye(m)
    t = _orbit_tangents(mats, v)
    basis = linalg.row_space(t.T, tol, atol=tol * np.linalg.norm(v))
    return linalg.orthocomplement(basis, np.eye(m), tol, dim=m)


def candidate_section(rep, seed=0, n_samples=N_SAMPLES, tol=TAU_RANK, orbit_dim=None):
    """Normal space to the orbit through a sampled principal point.

    With ``orbit_dim`` given, a point realizing it is required; otherwise the
    largest sampled orbit dimension is used.
    """
    sample = sample_orbits(rep, seed, n_samples, tol)
    target = sample.principal_orbit_dim if orbit_dim is None else orbit_dim
    mats, r = rep.orthonormal_actors()
    for v, d in zip(sample.points, sample.orbit_dims):
        if d == target:
            coords = _normal_space(mats, v, tol)
            return SectionCandidate(_to_module(coords, r), np.linalg.solve(r, v) if r.size else v, d)
    raise SamplingFailed(f"no point with orbit dimension {target} in {n_samples} samples (seed {seed})")


def _to_module(coords, r):
    # orthonormal coordinates -> module coordinates: y = r x  =>  x = r^-1 y
    if coords.size == 0:
        return coords
    return np.linalg.solve(r, coords.T).T


def trilinear_residual(mats, s):
    """``max |<A_x w, u>|`` over actor matrices and orthonormal rows of ``s``."""
    if mats.shape[0] == 0 or s.shape[0] == 0:
        return 0.0
    vals = np.einsum("auw,iw,ju->aij", mats, s, s, optimize=True)
    return float(np.max(np.abs(vals)))


@dataclass(frozen=True, eq=False)
class PolarityReport:
    cohomogeneity: int
    principal_orbit_dim: int
    module_dim: int
    section: object
    orthogonality_residual: float
    lie_triple_ok: bool
    polar: Verdict
    hyperpolar: object  # True, False or None (undecided)
    section_curvatures: tuple
    seed: int
    n_samples: int
    tolerances: Tolerances
    attempts: int = 1
    lie_triple_residual: float = 0.0
    bracket_norm: float = 0.0
    compact_side: bool = False
    label: str = ""

    @property
    def section_dim(self):
        s = self.section
        return s.dim if s is not None else 0

    def verdict_tuple(self):
        return (self.polar.value, self.hyperpolar, self.cohomogeneity)

    def to_json(self):
        sec = self.section
        if isinstance(sec, Subspace):
            sec_rows = sec.coeffs
        elif isinstance(sec, SectionCandidate):
            sec_rows = sec.coords
        else:
            sec_rows = np.zeros((0, 0))
        return {
            "label": self.label,
            "compact_side": self.compact_side,
            "cohomogeneity": self.cohomogeneity,
            "principal_orbit_dim": self.principal_orbit_dim,
            "module_dim": self.module_dim,
            "section": np.round(sec_rows, 12).tolist(),
            "orthogonality_residual": self.orthogonality_residual,
            "lie_triple_ok": self.lie_triple_ok,
            "lie_triple_residual": self.lie_triple_residual,
            "polar": self.polar.value,
            "hyperpolar": self.hyperpolar,
            "bracket_norm": self.bracket_norm,
            "section_curvatures": list(self.section_curvatures),
            "seed": self.seed,
            "n_samples": self.n_samples,
            "attempts": self.attempts,
            "tolerances": self.tolerances.as_dict(),
        }


def _linear_verdict(rep, seed, tols, n_samples):
    """Sample, build the section candidate and run the trilinear test with retries."""
    sample = sample_orbits(rep, seed, n_samples, tols.rank)
    top = sample.principal_orbit_dim
    mats, r = rep.orthonormal_actors()
    m = rep.module_dim
    if m == 0:
        return sample, SectionCandidate(np.zeros((0, 0)), np.zeros(0), 0), 0.0, Verdict.VERIFIED, 1
    points = list(sample.principal_points())
    rng = np.random.default_rng([seed, 1])
    attempts, best = 0, None
    while attempts < n_samples:
        if not points:
            # draw more principal points for the refutation retries
            v = rng.standard_normal(m)
            if _orbit_dim(mats, v, tols.rank) == top:
                points.append(v)
            else:
                attempts += 1
            continue
        v = points.pop(0)
        attempts += 1
        s = _normal_space(mats, v, tols.rank)
        resid = trilinear_residual(mats, s)
        cand = SectionCandidate(_to_module(s, r), np.linalg.solve(r, v), top)
        if best is None or resid < best[1]:
            best = (cand, resid)
        if resid <= tols.orth:
            return sample, cand, resid, Verdict.VERIFIED, attempts
        if resid <= tols.refute:
            return sample, cand, resid, Verdict.INCONCLUSIVE, attempts
    if best is None:
        raise SamplingFailed(f"no principal point found in {n_samples} tries (seed {seed})")
    return sample, best[0], best[1], Verdict.REFUTED, attempts


def is_polar_linear(rep, seed=0, tols=DEFAULT_TOLS, n_samples=N_SAMPLES):
    """Polarity of a linear representation via the normal space at a principal point."""
    sample, cand, resid, verdict, attempts = _linear_verdict(rep, seed, tols, n_samples)
    m = rep.module_dim
    return PolarityReport(
        cohomogeneity=m - sample.principal_orbit_dim,
        principal_orbit_dim=sample.principal_orbit_dim,
        module_dim=m,
        section=cand,
        orthogonality_residual=resid,
        lie_triple_ok=True,
        polar=verdict,
        hyperpolar=False,
        section_curvatures=(),
        seed=seed,
        n_samples=n_samples,
        tolerances=tols,
        attempts=attempts,
    )


def _bracket_norm(s, dec):
    if s.dim < 2:
        return 0.0
    q = linalg.gram_schmidt(s.coeffs, dec.b_theta)
    br = s.parent.bracket(q[:, None, :], q[None, :, :]).reshape(-1, s.parent.dim)
    return float(np.max(np.sqrt(np.abs(np.einsum("id,de,ie->i", br, dec.b_theta.gram, br)))))


def is_polar_action(h, dec, seed=0, tols=DEFAULT_TOLS, n_samples=N_SAMPLES, label=""):
    """Tangent-space polarity test for the action of ``h`` on ``G/K``.

    Verified requires a polar slice representation whose section candidate
    is a Lie triple system; a polar slice representation with a non-triple
    candidate is reported Inconclusive.
    """
    rep = slice_representation(h, dec, tols.rank)
    sample, cand, resid, verdict, attempts = _linear_verdict(rep, seed, tols, n_samples)
    section = rep.lift(cand.coords) if cand.dim else Subspace.zero(dec.algebra)
    triple_res = triple_residual(section, dec)
    triple_ok = triple_res <= tols.close
    if verdict is Verdict.VERIFIED and not triple_ok:
        verdict = Verdict.INCONCLUSIVE
    bnorm = _bracket_norm(section, dec)
    curv = tuple(section_curvatures(section, dec)) if verdict is Verdict.VERIFIED else ()
    report = PolarityReport(
        cohomogeneity=rep.module_dim - sample.principal_orbit_dim,
        principal_orbit_dim=sample.principal_orbit_dim,
        module_dim=rep.module_dim,
        section=section,
        orthogonality_residual=resid,
        lie_triple_ok=triple_ok,
        polar=verdict,
        # a refuted action is not hyperpolar; an inconclusive one is undecided
        hyperpolar=None if verdict is Verdict.INCONCLUSIVE else False,
        section_curvatures=curv,
        seed=seed,
        n_samples=n_samples,
        tolerances=tols,
        attempts=attempts,
        lie_triple_residual=triple_res,
        bracket_norm=bnorm,
        compact_side=dec.compact_side,
        label=label,
    )
    if verdict is Verdict.VERIFIED:
        object.__setattr__(report, "hyperpolar", is_hyperpolar(report, dec, tols.close))
    return report


def is_hyperpolar(report, dec, tol=TAU_CLOSE):
    """Flat section: all brackets of section vectors vanish."""
    if report.polar is not Verdict.VERIFIED:
        raise NotPolar("hyperpolarity is only defined for verified polar actions")
    section = report.section
    if not isinstance(section, Subspace):
        raise NotPolar("report carries no algebra-level section")
    return _bracket_norm(section, dec) <= tol


def section_curvatures(s, dec):
    """Sectional curvatures ``K(s_i, s_j)``, ``i < j``, of an orthonormalized section.

    ``K(X, Y) = eps B([[X, Y], Y], X) / (|X|^2 |Y|^2 - <X, Y>^2)`` with
    ``eps = -1`` on the noncompact side (metric ``B`` on ``p``) and ``+1`` on
    the compact side (metric ``-B`` on ``ip``).
    """
    if s.dim < 2:
        return []
    q = linalg.gram_schmidt(s.coeffs, dec.b_theta)
    alg = s.parent
    kill = alg.killing.gram
    eps = 1.0 if dec.compact_side else -1.0
    out = []
    for i in range(q.shape[0]):
        for j in range(i + 1, q.shape[0]):
            x, y = q[i], q[j]
            num = eps * (alg.bracket(alg.bracket(x, y), y) @ kill @ x)
            den = (x @ dec.b_theta.gram @ x) * (y @ dec.b_theta.gram @ y) - (x @ dec.b_theta.gram @ y) ** 2
            out.append(float(num / den))
    return out


def dual_cohomogeneity_check(h, dec, seed=0, tols=DEFAULT_TOLS, n_samples=N_SAMPLES, pair=None):
    """Cohomogeneities of ``h`` on ``G/K`` and of ``psi(h)`` on the compact dual."""
    from .duality import dualize_algebra, dualize_subalgebra

    pair = dualize_algebra(dec, tols.close, tols.rank) if pair is None else pair
    h_star = dualize_subalgebra(pair, h, tols.close, tols.rank)
    c = cohomogeneity(slice_representation(h, dec, tols.rank), seed, n_samples, tols.rank)
    c_star = cohomogeneity(slice_representation(h_star, pair.compact_decomposition, tols.rank),
                           seed, n_samples, tols.rank)
    return c, c_star
