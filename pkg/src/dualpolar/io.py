"""JSON reading and writing for algebras, subspaces and reports.

Algebra files hold ``{"name", "ambient_size", "basis"}`` where ``basis`` is a
list of N x N matrices whose entries are ``[re, im]`` pairs.  Subspace files
hold ``{"parent", "coeffs"}`` with one real row per spanning vector, in the
coordinates of the parent's basis.
"""
import json
import os

import numpy as np

from .errors import DualPolarError, InputError
from .liealg import Subspace, build_algebra


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None


def dumps(obj, fmt="json"):
    """Deterministic JSON text (sorted keys, fixed separators)."""
    return json.dumps(obj, sort_keys=True, indent=2, default=_default) + "\n"


def _default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _require(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"{where}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise InputError(f"{where}: field {key!r} has the wrong type")
    return value


def algebra_from_json(obj, where="algebra"):
    """Build a :class:`MatrixLieAlgebra` from the JSON algebra format."""
    if isinstance(obj, dict) and "algebra" in obj and "basis" not in obj:
        obj = obj["algebra"]
    name = _require(obj, "name", str, where)
    size = _require(obj, "ambient_size", int, where)
    raw = _require(obj, "basis", list, where)
    try:
        basis = np.array(raw, dtype=float)
    except (TypeError, ValueError):
        raise InputError(f"{where}: basis entries must be numeric [re, im] pairs") from None
    if basis.ndim != 4 or basis.shape[1:] != (size, size, 2):
        raise InputError(f"{where}: basis must have shape (d, {size}, {size}, 2), got {basis.shape}")
    if not np.all(np.isfinite(basis)):
        raise InputError(f"{where}: basis has non-finite entries")
    mats = basis[..., 0] + 1j * basis[..., 1]
    try:
        return build_algebra(name, mats)
    except DualPolarError as exc:
        raise InputError(f"{where}: {exc}") from None


def subspace_from_json(obj, alg, where="subspace"):
    """Subspace of ``alg`` from ``{"parent", "coeffs"}``."""
    if isinstance(obj, dict) and "subalgebra" in obj and "coeffs" not in obj:
        obj = obj["subalgebra"]
    parent = _require(obj, "parent", str, where)
    if parent != alg.name:
        raise InputError(f"{where}: parent {parent!r} does not match algebra {alg.name!r}")
    raw = _require(obj, "coeffs", list, where)
    try:
        coeffs = np.array(raw, dtype=float).reshape(len(raw), -1) if raw else np.zeros((0, alg.dim))
    except (TypeError, ValueError):
        raise InputError(f"{where}: coeffs must be a k x d array of reals") from None
    if coeffs.shape[1] != alg.dim or not np.all(np.isfinite(coeffs)):
        raise InputError(f"{where}: coeffs must have {alg.dim} finite columns")
    try:
        return Subspace(alg, coeffs) if coeffs.size else Subspace.zero(alg)
    except DualPolarError as exc:
        raise InputError(f"{where}: {exc}") from None


def load_algebra(path):
    return algebra_from_json(load_json(path), where=os.fspath(path))


def load_subspace(path, alg):
    return subspace_from_json(load_json(path), alg, where=os.fspath(path))


def write_text(text, out=None):
    """Write ``text`` to ``out`` (a path) or return it for stdout."""
    if out in (None, "-"):
        return text
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)
    return None
