from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualpolar import catalog
from dualpolar.actions import Verdict, is_polar_action
from dualpolar.cartan import is_canonically_embedded
from dualpolar.duality import dualize_algebra, dualize_subalgebra
from dualpolar.errors import DimensionError, NotCommuting, Unsupported
from dualpolar.liealg import is_subalgebra


def test_spin3_commutation_relations():
    x = catalog.spin3_generators()
    br = lambda a, b: a @ b - b @ a  # noqa: E731
    assert np.array_equal(br(x[0], x[1]), x[2])
    assert np.array_equal(br(x[1], x[2]), x[0])
    assert np.array_equal(br(x[2], x[0]), x[1])


def test_spin3_casimir_is_scalar():
    x = catalog.spin3_generators()
    # -l(l+1) with l = 3: a single eigenvalue witnesses irreducibility
    assert np.array_equal(sum(a @ a for a in x), -12 * np.eye(7))


def test_spin3_preserves_its_inner_product():
    rep = catalog.spin3_on_R7()
    g = rep.inner.gram
    for a in rep.actor_matrices:
        assert np.allclose(a.T @ g + g @ a, 0)
    for a in catalog.spin3_so7():
        assert np.allclose(a, -a.T)


@pytest.mark.parametrize("key", catalog.DEFAULT_KEYS)
def test_entry_invariants(key):
    e = catalog.get_entry(key)
    assert is_subalgebra(e.subalgebra)
    assert is_canonically_embedded(e.subalgebra, e.decomposition)
    pair = dualize_algebra(e.decomposition)
    assert dualize_subalgebra(pair, e.subalgebra).dim == e.subalgebra.dim


@pytest.mark.parametrize("key", catalog.DEFAULT_KEYS)
def test_verdict_matches_expected(key):
    e = catalog.get_entry(key)
    report = is_polar_action(e.subalgebra, e.decomposition, seed=0)
    assert (report.polar is Verdict.VERIFIED) == e.expected["polar"]
    assert report.polar is not Verdict.INCONCLUSIVE
    if e.expected["cohomogeneity"] is not None:
        assert report.cohomogeneity == e.expected["cohomogeneity"]
    if e.expected["hyperpolar"] is not None:
        assert report.hyperpolar == e.expected["hyperpolar"]


def test_theorem_8_1_examples():
    e = catalog.embed_theorem_8_1(2, 4, "so2")
    assert e.subalgebra.dim == 4 and e.expected["orbit"] == "H^2"
    assert e.expected["cohomogeneity"] == 1
    full = catalog.embed_theorem_8_1(3, 3)
    assert full.expected["cohomogeneity"] == 0
    assert catalog.embed_theorem_8_1(1, 3).expected["cohomogeneity"] == 2
    with pytest.raises(DimensionError):
        catalog.embed_theorem_8_1(0, 3)
    with pytest.raises(DimensionError):
        catalog.embed_theorem_8_1(1, 5, "spin3")


def test_theorem_9_1_examples():
    assert catalog.embed_theorem_9_1("i", 1, 2, "u1").expected["orbit"] == "CH^1"
    assert catalog.embed_theorem_9_1("ii", 2, 2).expected["orbit"] == "H^2"
    torus = catalog.embed_theorem_9_1("iii", None, 2, "t2")
    assert torus.expected["hyperpolar"] is False
    for exceptional in ("e6", "E7"):
        with pytest.raises(Unsupported):
            catalog.embed_theorem_9_1("iii", None, 3, exceptional)


def test_theorem_10_1_examples():
    e = catalog.embed_theorem_10_1("ii", 1, 2, "1")
    assert e.expected["orbit"] == "CH^1"
    assert catalog.embed_theorem_10_1("iv", None, 2, (1, 1)).expected["orbit"] == "point"
    with pytest.raises(Unsupported):
        catalog.embed_theorem_10_1("i", 1, 4, "3")
    with pytest.raises(DimensionError):
        catalog.embed_theorem_10_1("i", 1, 3, "1")


def test_keys_and_aliases():
    assert catalog.get_entry("torus/su(1,2)") is catalog.get_entry("thm9.1/iii/n=2,L=t2")
    with pytest.raises(Unsupported):
        catalog.get_entry("thm11/whatever")
    data = catalog.get_entry("isotropy/so(1,3)").to_json()
    assert data["algebra"] == "so(1,3)" and data["sources"]["polar"] == "derived"


def test_algebra_by_key():
    assert catalog.algebra_by_key("sl2r")[0].name == "sl(2,R)"
    assert catalog.algebra_by_key("so(1, 3)")[0].name == "so(1,3)"
    assert catalog.algebra_by_key("su(3)")[0].dim == 8
    with pytest.raises(Unsupported):
        catalog.algebra_by_key("g2")


def test_example_7_1_identity_conjugator():
    # with g = id both -1 blocks start at index 0, so r = min(p, q)
    e = catalog.example_7_1_entry(2, 1, 2)
    assert e.r == 1 and e.isotropy_dim == 3


def test_example_7_1_spec_cases():
    g = catalog.example_7_1_conjugator(7, 2, 3, 1)
    e = catalog.example_7_1_entry(3, 2, 3, g)
    assert e.r == 1 and e.isotropy_dim == 0 + 0 + 1 + 3
    e = catalog.example_7_1_entry(2, 2, 2, catalog.example_7_1_conjugator(5, 2, 2, 2))
    assert e.r == 2 and e.isotropy_dim == 1 + 3
    e = catalog.example_7_1_entry(2, 1, 2, catalog.example_7_1_conjugator(5, 1, 2, 0))
    assert e.r == 0 and e.isotropy_dim == 2


def test_example_7_1_not_commuting():
    c, s = np.cos(0.3), np.sin(0.3)
    g = np.eye(5)
    g[np.ix_([0, 2], [0, 2])] = [[c, -s], [s, c]]
    with pytest.raises(NotCommuting):
        catalog.example_7_1_entry(2, 1, 2, g)


def test_conjugators_are_signed_permutations():
    for n, p, q, r in [(5, 1, 2, 0), (7, 3, 3, 1), (9, 2, 4, 2)]:
        g = catalog.example_7_1_conjugator(n, p, q, r)
        assert np.allclose(g @ g.T, np.eye(n))
        assert np.isclose(np.linalg.det(g), 1.0)
        assert set(np.abs(g).ravel()) <= {0.0, 1.0}


@pytest.mark.parametrize("m, p, q, rows", [(2, 1, 2, 2), (3, 2, 3, 3), (3, 3, 3, 4)])
def test_table_rows(m, p, q, rows):
    table = catalog.example_7_1_table(m, p, q)
    assert len(table) == rows and all(r.match for r in table)


def test_table_last_row_oracle():
    assert catalog.example_7_1_table(3, 3, 3)[-1].computed == 3 + 6


@given(st.integers(1, 4).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, m), st.integers(1, m))))
def test_closed_form_case_list_agrees_with_sum_of_binomials(mpq):
    m, p, q = mpq
    n = 2 * m + 1
    for r in range(min(p, q) + 1):
        generic = comb(r, 2) + comb(p - r, 2) + comb(q - r, 2) + comb(n - p - q + r, 2)
        assert catalog.example_7_1_closed_form(n, p, q, r) == generic
