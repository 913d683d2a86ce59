import numpy as np
import pytest

from dualpolar import families
from dualpolar.errors import DimensionError


@pytest.mark.parametrize(
    "maker, args, dim, dk, dp",
    [
        (families.make_so, (0, 3), 3, 3, 0),
        (families.make_so, (1, 2), 3, 1, 2),
        (families.make_so, (2, 3), 10, 4, 6),
        (families.make_su, (0, 2), 3, 3, 0),
        (families.make_su, (1, 1), 3, 1, 2),
        (families.make_su, (1, 2), 8, 4, 4),
        (families.make_sp, (0, 1), 3, 3, 0),
        (families.make_sp, (1, 1), 10, 6, 4),
        (families.make_sp, (0, 2), 10, 10, 0),
        (families.make_sl, (3,), 8, 3, 5),
    ],
)
def test_dimensions(maker, args, dim, dk, dp):
    alg, dec = maker(*args)
    assert (alg.dim, dec.k.dim, dec.p.dim) == (dim, dk, dp)


def test_so_defining_relation():
    alg, _ = families.make_so(1, 3)
    s = families.signature_matrix(1, 4)
    for x in alg.basis:
        assert np.allclose(x.imag, 0)
        assert np.allclose(x.T @ s + s @ x, 0)


def test_sp_commutes_with_structure_map():
    alg, _ = families.make_sp(1, 1)
    j = families.quaternionic_j(2)
    for x in alg.basis:
        assert np.allclose(j @ x.conj(), x @ j)


def test_su_is_traceless():
    alg, _ = families.make_su(1, 2)
    assert np.allclose(np.trace(alg.basis, axis1=1, axis2=2), 0)


@pytest.mark.parametrize("family, n", [("so", 4), ("so", 5), ("su", 3), ("sl", 2), ("sp", 2)])
def test_killing_is_trace_form_multiple(family, n):
    maker = {"so": lambda: families.make_so(0, n), "su": lambda: families.make_su(0, n),
             "sl": lambda: families.make_sl(n), "sp": lambda: families.make_sp(0, n)}[family]
    alg, _ = maker()
    trace = np.einsum("aij,bji->ab", alg.basis, alg.basis).real
    assert np.allclose(alg.killing.gram, families.trace_form_constant(family, n) * trace, atol=1e-8)


def test_invalid_sizes():
    with pytest.raises(DimensionError):
        families.make_so(1, 0)
    with pytest.raises(DimensionError):
        families.signature_matrix(3, 2)
