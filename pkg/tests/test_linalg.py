import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from dualpolar import linalg
from dualpolar.errors import FormNotDefinite, InvalidMatrix, NotInvolution
from dualpolar.linalg import BilinearForm

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def test_rank_of_known_matrices():
    assert linalg.numerical_rank(np.zeros((3, 3))) == 0
    assert linalg.numerical_rank(np.eye(4)) == 4
    assert linalg.numerical_rank([[1, 2], [2, 4]]) == 1
    # a singular value just above the relative cut survives, one below does not
    assert linalg.numerical_rank(np.diag([1.0, 1e-7])) == 2
    assert linalg.numerical_rank(np.diag([1.0, 1e-9])) == 1


def test_atol_suppresses_roundoff():
    noise = 1e-17 * np.ones((2, 2))
    assert linalg.numerical_rank(noise) == 1
    assert linalg.numerical_rank(noise, atol=1e-12) == 0


def test_rejects_nonfinite():
    with pytest.raises(InvalidMatrix):
        linalg.as_matrix([[1.0, np.nan]])
    with pytest.raises(InvalidMatrix):
        linalg.as_matrix([1.0, 2.0])


def test_nullspace_oracle():
    ns = linalg.nullspace([[1.0, 1.0, 0.0]])
    assert ns.shape == (2, 3)
    assert np.allclose(ns @ [1, 1, 0], 0)
    assert np.allclose(ns @ ns.T, np.eye(2))


@given(arrays(float, (3, 5), elements=finite))
def test_rank_nullity(m):
    r = linalg.numerical_rank(m)
    ns = linalg.nullspace(m)
    assert r + ns.shape[0] == 5
    scale = max(1.0, np.abs(m).max())
    assert np.allclose(m @ ns.T, 0, atol=1e-7 * scale)


def test_signature():
    f = BilinearForm(np.diag([2.0, -1.0, 0.0]))
    assert f.signature() == (1, 1, 1)
    assert f.definiteness() == 0
    assert BilinearForm(-np.eye(2)).definiteness() == -1
    assert BilinearForm(np.eye(2)).is_positive_definite()


def test_form_must_be_symmetric():
    with pytest.raises(InvalidMatrix):
        BilinearForm(np.array([[1.0, 2.0], [0.0, 1.0]]))


@given(arrays(float, (4, 4), elements=finite))
def test_gram_schmidt_orthonormal(m):
    g = np.diag([1.0, 2.0, 3.0, 4.0])
    q = linalg.gram_schmidt(m, g)
    assert np.allclose(q @ g @ q.T, np.eye(q.shape[0]), atol=1e-8)


def test_orthocomplement_and_definiteness():
    g = np.diag([1.0, 4.0])
    comp = linalg.orthocomplement([[1.0, 1.0]], g)
    assert comp.shape == (1, 2)
    assert abs(np.array([1.0, 1.0]) @ g @ comp[0]) < 1e-12
    assert np.isclose(comp[0] @ g @ comp[0], 1.0)
    with pytest.raises(FormNotDefinite):
        linalg.orthocomplement([[1.0, 0.0]], np.diag([1.0, -1.0]))


def test_eigensplit():
    t = np.diag([1.0, -1.0, 1.0])
    plus, minus = linalg.eigensplit_involution(t)
    assert plus.shape == (2, 3) and minus.shape == (1, 3)
    with pytest.raises(NotInvolution):
        linalg.eigensplit_involution(np.diag([1.0, 2.0]))


def test_principal_angles_oracle():
    a = [[1.0, 0.0]]
    b = [[1.0, 1.0]]
    assert np.isclose(linalg.principal_angles(a, b)[0], np.pi / 4)
    # under diag(1, 3) the same lines meet at 60 degrees
    assert np.isclose(linalg.principal_angles(a, b, np.diag([1.0, 3.0]))[0], np.pi / 3)


@given(arrays(float, (2, 4), elements=finite), arrays(float, (2, 2), elements=finite))
def test_same_span_under_mixing(a, mix):
    if linalg.numerical_rank(a, 1e-6) < 2 or abs(np.linalg.det(mix)) < 1e-3:
        return
    assert linalg.same_span(a, mix @ a, tol=1e-6)


def test_intersect():
    a = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]
    b = [[0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
    i = linalg.intersect(a, b)
    assert i.shape == (1, 3)
    assert np.isclose(abs(i[0, 1]), 1.0)
    assert linalg.intersect(a, [[0.0, 0.0, 1.0]]).shape == (0, 3)


def test_span_residual():
    assert linalg.span_residual([[3.0, 4.0]], [[1.0, 0.0]]) == pytest.approx(4.0)
    assert linalg.span_residual([[3.0, 4.0]], np.zeros((0, 2))) == pytest.approx(5.0)
