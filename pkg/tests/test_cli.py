import json

import numpy as np
import pytest

from dualpolar import cli
from dualpolar.catalog import algebra_by_key, embed, so_matrices
from dualpolar.errors import InputError
from dualpolar.io import algebra_from_json, load_algebra, subspace_from_json
from dualpolar.liealg import Subspace


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def _write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def sl2_files(tmp_path):
    alg, _ = algebra_by_key("sl2r")
    nil = Subspace.from_matrices(alg, [np.array([[0, 1], [0, 0]], dtype=complex)])
    h = np.array([[1, 0], [0, -1]], dtype=complex)
    borel = Subspace.from_matrices(alg, [h, np.array([[0, 1], [0, 0]], dtype=complex)])
    return (_write(tmp_path, "sl2.json", alg.to_json()), _write(tmp_path, "nil.json", nil.to_json()),
            _write(tmp_path, "borel.json", borel.to_json()))


def test_algebra_json_roundtrip(tmp_path):
    alg, _ = algebra_by_key("su(1,2)")
    back = load_algebra(_write(tmp_path, "a.json", alg.to_json()))
    assert back.name == alg.name
    assert np.allclose(back.basis, alg.basis)
    assert np.allclose(back.killing.gram, alg.killing.gram)


@pytest.mark.parametrize("bad", [
    {"name": "x", "ambient_size": 2},
    {"name": "x", "ambient_size": 2, "basis": [[[1, 0]]]},
    {"name": "x", "ambient_size": 2, "basis": [[[["a", 0], [0, 0]], [[0, 0], [0, 0]]]]},
])
def test_schema_violations(bad):
    with pytest.raises(InputError):
        algebra_from_json(bad)


def test_subspace_parent_must_match():
    alg, _ = algebra_by_key("sl2r")
    with pytest.raises(InputError):
        subspace_from_json({"parent": "so(3)", "coeffs": [[1, 0, 0]]}, alg)
    with pytest.raises(InputError):
        subspace_from_json({"parent": alg.name, "coeffs": [[1, 0]]}, alg)


def test_check_nilpotent_line_is_not_reductive(capsys, sl2_files):
    code, out = run(capsys, "check", "sl2r", sl2_files[1])
    report = json.loads(out)
    assert report["reductive"] is False and code == cli.EXIT_FAIL
    assert report["config"]["seed"] == 0


def test_check_block_in_so13(capsys, tmp_path):
    alg, _ = algebra_by_key("so(1,3)")
    block = Subspace.from_matrices(alg, [embed(x, 0, 4) for x in so_matrices(1, 2)])
    code, out = run(capsys, "check", "so(1,3)", _write(tmp_path, "b.json", block.to_json()))
    report = json.loads(out)
    assert code == cli.EXIT_OK
    assert all(report[k] for k in ("subalgebra", "semisimple", "reductive", "canonical"))


def test_check_from_algebra_file(capsys, sl2_files):
    code, out = run(capsys, "check", sl2_files[0])
    assert code == cli.EXIT_OK and json.loads(out)["algebra"] == "sl(2,R)"


def test_malformed_json_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["check", "sl2r", str(bad)]) == cli.EXIT_INPUT
    assert cli.main(["check", str(bad)]) == cli.EXIT_INPUT
    assert cli.main(["check", "no-such-algebra"]) == cli.EXIT_INPUT
    assert cli.main(["check", "sl2r", "--tol-rank", "-1"]) == cli.EXIT_INPUT


def test_dualize_sl2(capsys):
    code, out = run(capsys, "dualize", "sl2r")
    data = json.loads(out)
    assert code == 0 and data["compact"]["name"] == "su(2)"
    assert data["certificate"]["negative_definite"]


def test_dualize_borel_fails_with_defect(capsys, sl2_files):
    code, out = run(capsys, "dualize", "sl2r", sl2_files[2])
    assert code == cli.EXIT_FAIL
    assert json.loads(out)["defect"] == 1


def test_dualize_compact_is_identity(capsys):
    code, out = run(capsys, "dualize", "so(4)")
    data = json.loads(out)
    assert code == 0 and data["compact"]["name"] == "so(4)"
    to_c = lambda key: np.array(data[key]["basis"]) @ [1, 1j]  # noqa: E731
    # the exported psi matrix maps every basis matrix to itself
    psi = np.array(data["psi"])
    assert np.allclose(np.tensordot(psi.T, to_c("compact"), axes=1), to_c("noncompact"))


def test_polar_verified_pair(capsys):
    code, out = run(capsys, "polar", "thm8.1/i/k=2,n=4,L=so2")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert data["noncompact"]["polar"] == data["compact"]["polar"] == "Verified"


def test_polar_spin3_refuted_on_both_sides(capsys):
    code, out = run(capsys, "polar", "thm8.1/i/k=1,n=8,L=spin3")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert data["noncompact"]["polar"] == data["compact"]["polar"] == "RefutedBySliceRep"


def test_polar_transitive(capsys):
    code, out = run(capsys, "polar", "transitive/so(1,3)")
    data = json.loads(out)
    assert code == 0 and data["noncompact"]["cohomogeneity"] == 0


def test_polar_inconclusive_exits_3(capsys):
    code, out = run(capsys, "polar", "isotropy/sp(1,1)", "--tol-orth", "1e-300", "--tol-refute", "1")
    assert code == cli.EXIT_INCONCLUSIVE
    assert json.loads(out)["noncompact"]["polar"] == "Inconclusive"


def test_polar_from_files(capsys, tmp_path):
    alg, dec = algebra_by_key("so(1,3)")
    sub = _write(tmp_path, "k.json", dec.k.to_json())
    code, out = run(capsys, "polar", "--algebra", "so(1,3)", "--sub", sub)
    assert code == 0 and json.loads(out)["noncompact"]["cohomogeneity"] == 1


def test_polar_json_is_byte_identical(tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        assert cli.main(["polar", "thm9.1/iii/n=2,L=t2", "--seed", "11", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_table_csv(capsys):
    code, out = run(capsys, "table7_1", "2", "1", "2", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines == ["r,computed_dim,closed_form_dim,match", "0,2,2,True", "1,3,3,True"]


def test_table_bad_parameters_exit_1(capsys):
    assert cli.main(["table7_1", "2", "3", "1"]) == cli.EXIT_FAIL


def test_suite_subset_and_tightened_orthogonality(capsys):
    code, out = run(capsys, "suite", "--criteria", "1,2")
    assert code == 0 and json.loads(out)["passed"]
    # 1e-14 is still above the roundoff floor here; 1e-16 is below it
    code, out = run(capsys, "suite", "--criteria", "5", "--tol-orth", "1e-16")
    data = json.loads(out)
    assert code == cli.EXIT_FAIL and data["criteria"][0]["details"]["inconclusive"] > 0


def test_catalog_list_and_export(capsys):
    code, out = run(capsys, "catalog", "list")
    assert code == 0 and "isotropy/so(1,3)" in json.loads(out)["keys"]
    code, out = run(capsys, "catalog", "export", "torus/su(1,2)")
    data = json.loads(out)
    alg = algebra_from_json(data)
    assert subspace_from_json(data, alg).dim == 2


def test_unknown_subcommand_exits_2(capsys):
    assert cli.main(["frobnicate"]) == cli.EXIT_INPUT
