import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualpolar import duality
from dualpolar.catalog import embed, real_form, so_matrices
from dualpolar.errors import NotClosed, NotThetaStable
from dualpolar.liealg import Subspace, is_subalgebra

vec = st.lists(st.floats(-2, 2, allow_nan=False), min_size=6, max_size=6)


@pytest.fixture(scope="module")
def pair13():
    _, dec = real_form("so", 1, 3)
    return duality.dualize_algebra(dec)


def test_sl2_dualizes_to_su2():
    _, dec = real_form("sl", 2)
    pair = duality.dualize_algebra(dec)
    assert pair.compact.name == "su(2)"
    assert pair.compact.killing.definiteness() == -1
    # psi(k) = k and psi(p) = ip: dims preserved
    assert pair.compact_decomposition.k.dim == 1
    assert pair.compact_decomposition.p.dim == 2


def test_so12_dual_is_so3():
    _, dec = real_form("so", 1, 2)
    pair = duality.dualize_algebra(dec)
    assert pair.compact.name == "so(3)"
    # every matrix of g* is skew-Hermitian
    for x in pair.compact.basis:
        assert np.allclose(x.conj().T, -x)


def test_compact_input_dualizes_to_itself():
    alg, dec = real_form("su", 0, 3)
    pair = duality.dualize_algebra(dec)
    # psi is the identity on matrices (it only changes coordinates)
    eye = np.eye(alg.dim)
    assert np.allclose(pair.compact.element(duality.psi(pair, eye)), alg.element(eye))
    assert pair.compact.name == "su(3)"


@given(vec, vec)
def test_psi_bracket_signs(a, b):
    _, dec = real_form("so", 1, 3)
    pair = duality.dualize_algebra(dec)
    alg, comp = pair.noncompact, pair.compact
    k, p = dec.k.coeffs, dec.p.coeffs
    x1, x2 = np.array(a[:3]) @ k, np.array(b[:3]) @ k
    y1, y2 = np.array(a[3:]) @ p, np.array(b[3:]) @ p
    psi = lambda v: duality.psi(pair, v)  # noqa: E731
    # k-k and k-p brackets are preserved, p-p brackets change sign
    assert np.allclose(comp.bracket(psi(x1), psi(x2)), psi(alg.bracket(x1, x2)), atol=1e-9)
    assert np.allclose(comp.bracket(psi(x1), psi(y1)), psi(alg.bracket(x1, y1)), atol=1e-9)
    assert np.allclose(comp.bracket(psi(y1), psi(y2)), -psi(alg.bracket(y1, y2)), atol=1e-9)


@given(vec)
def test_psi_roundtrip(a):
    _, dec = real_form("so", 1, 3)
    pair = duality.dualize_algebra(dec)
    v = np.array(a)
    assert np.allclose(duality.psi_inverse(pair, duality.psi(pair, v)), v, atol=1e-10)


def test_dualize_stable_subalgebra(pair13):
    alg = pair13.noncompact
    block = Subspace.from_matrices(alg, [embed(x, 0, 4) for x in so_matrices(1, 2)])
    h_star = duality.dualize_subalgebra(pair13, block)
    assert h_star.dim == 3 and is_subalgebra(h_star)
    assert duality.roundtrip_ok(pair13, block)


def test_borel_is_rejected_with_defect():
    alg, dec = real_form("sl", 2)
    pair = duality.dualize_algebra(dec)
    h = np.array([[1, 0], [0, -1]], dtype=complex)
    e = np.array([[0, 1], [0, 0]], dtype=complex)
    borel = Subspace.from_matrices(alg, [h, e])
    with pytest.raises(NotThetaStable) as info:
        duality.dualize_subalgebra(pair, borel)
    assert info.value.defect == 1
    assert duality.psi_closure_residual(pair, borel) > 1e-3


def test_non_subalgebra_is_rejected(pair13):
    alg = pair13.noncompact
    with pytest.raises(NotClosed):
        duality.dualize_subalgebra(pair13, Subspace(alg, pair13.decomposition.p.coeffs[:2]))


@pytest.mark.parametrize("seed", [0, 1, 2**40 + 3])
def test_random_conjugates_split_by_stability(seed):
    from dualpolar.cartan import canonical_defect
    from dualpolar.catalog import get_entry
    from dualpolar.suite import random_conjugates

    for key, stable, sub in random_conjugates(seed, n_each=7):
        dec = get_entry(key).decomposition
        assert is_subalgebra(sub)
        assert (canonical_defect(sub, dec) == 0) == stable
