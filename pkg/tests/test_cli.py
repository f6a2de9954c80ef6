import json
import subprocess
import sys

import pytest

from helpers import dihedral_nrack
from nracks import cyclic_group, levi_civita_nalgebra, symmetric_group
from nracks.jsonio import dump_document, group_to_json, nrack_to_json, tensor_to_json


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "nracks.cli", *args],
        capture_output=True,
        text=True,
    )


@pytest.fixture
def workspace(tmp_path):
    files = {}
    files["dihedral"] = tmp_path / "dihedral.json"
    files["dihedral"].write_text(dump_document(nrack_to_json(dihedral_nrack(3))))
    files["mod2"] = tmp_path / "mod2.json"
    files["mod2"].write_text(
        dump_document({"arity": 2, "size": 2, "basepoint": None, "table": [0, 1, 1, 0]})
    )
    files["s3"] = tmp_path / "s3.json"
    files["s3"].write_text(dump_document(group_to_json(symmetric_group(3))))
    files["nambu"] = tmp_path / "nambu.json"
    files["nambu"].write_text(dump_document(tensor_to_json(levi_civita_nalgebra(4))))
    files["dir"] = tmp_path
    return files


def test_check_valid_table(workspace):
    result = run_cli("check", "--input", str(workspace["dihedral"]))
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["classification"]["is_nkei"] is True
    assert doc["counterexamples"]["left_distributive"] is None


def test_check_invalid_table_exit_1_with_witness(workspace):
    result = run_cli("check", "--input", str(workspace["mod2"]))
    assert result.returncode == 1
    doc = json.loads(result.stdout)
    assert doc["counterexamples"]["left_distributive"] == {
        "prefix": [1],
        "arguments": [0, 0],
    }


def test_check_parse_error_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run_cli("check", "--input", str(bad)).returncode == 2
    missing = tmp_path / "missing.json"
    assert run_cli("check", "--input", str(missing)).returncode == 2
    wrong = tmp_path / "wrong.json"
    wrong.write_text('{"arity": 2, "size": 2, "table": [0, 1, 1]}')
    assert run_cli("check", "--input", str(wrong)).returncode == 2


def test_construct_z4_and_roundtrip(workspace):
    out = workspace["dir"] / "z4.json"
    result = run_cli("construct", "z4", "--n", "3", "--m", "4", "--output", str(out))
    assert result.returncode == 0
    check = run_cli("check", "--input", str(out))
    assert check.returncode == 0
    doc = json.loads(check.stdout)
    assert doc["classification"]["is_weak_nkei"] is True


def test_construct_gamma_equals_z4_byte_identical(workspace):
    a = workspace["dir"] / "a.json"
    b = workspace["dir"] / "b.json"
    assert run_cli("construct", "gamma", "--n", "3", "--m", "4", "--t", "1", "--s", "2",
                   "--output", str(a)).returncode == 0
    assert run_cli("construct", "z4", "--n", "3", "--m", "4", "--output", str(b)).returncode == 0
    assert a.read_bytes() == b.read_bytes()


def test_construct_gamma_rejection_exit_2():
    result = run_cli("construct", "gamma", "--n", "3", "--m", "5", "--t", "3", "--s", "1")
    assert result.returncode == 2
    assert "s^2 + t*s - s" in result.stderr


def test_construct_conj_s3(workspace):
    out = workspace["dir"] / "conj.json"
    result = run_cli("construct", "conj", "--group", str(workspace["s3"]), "--n", "3",
                     "--output", str(out))
    assert result.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["size"] == 6 and doc["basepoint"] == 0
    assert run_cli("check", "--input", str(out)).returncode == 0


def test_construct_lift_and_reduce_roundtrip(workspace):
    lifted = workspace["dir"] / "lifted.json"
    assert run_cli("construct", "lift", "--input", str(workspace["dihedral"]),
                   "--n", "3", "--output", str(lifted)).returncode == 0
    reduced = workspace["dir"] / "reduced.json"
    assert run_cli("construct", "reduce", "--input", str(lifted),
                   "--output", str(reduced)).returncode == 0
    doc = json.loads(reduced.read_text())
    assert doc["arity"] == 2 and doc["size"] == 9
    assert run_cli("check", "--input", str(reduced)).returncode == 0


def test_reduce_alias_matches_construct_reduce(workspace):
    a = workspace["dir"] / "ra.json"
    b = workspace["dir"] / "rb.json"
    assert run_cli("reduce", "--input", str(workspace["dihedral"]), "--output", str(a)).returncode == 0
    assert run_cli("construct", "reduce", "--input", str(workspace["dihedral"]),
                   "--output", str(b)).returncode == 0
    assert a.read_bytes() == b.read_bytes()


def test_construct_module_group(tmp_path):
    H = cyclic_group(4)
    V = cyclic_group(5)
    bundle = {
        "arity": 3,
        "group": group_to_json(H),
        "module": group_to_json(V),
        "action": [[(v * pow(2, k, 5)) % 5 for v in range(5)] for k in range(4)],
        "bracket": [
            ((a - b) * (b - c) * (a - c)) % 4
            for a in range(4)
            for b in range(4)
            for c in range(4)
        ],
    }
    path = tmp_path / "bundle.json"
    path.write_text(dump_document(bundle))
    out = tmp_path / "mg.json"
    result = run_cli("construct", "module-group", "--input", str(path), "--output", str(out))
    assert result.returncode == 0
    assert run_cli("check", "--input", str(out)).returncode == 0


def test_construct_module_group_failure_exit_1(tmp_path):
    # Parameter-valid data whose table fails the axioms: exit 1 with the
    # counterexample recorded in the report.
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    odd = [
        sum(1 for a in range(3) for b in range(a + 1, 3) if p[a] > p[b]) % 2
        for p in perms
    ]
    f = [0, 1, 0, 0, 0, 0]
    bundle = {
        "arity": 3,
        "group": group_to_json(symmetric_group(3)),
        "module": group_to_json(cyclic_group(3)),
        "action": [[(v * (2 if odd[k] else 1)) % 3 for v in range(3)] for k in range(6)],
        "bracket": [
            1 if (f[a] + f[b] + f[c]) % 2 else 0
            for a in range(6)
            for b in range(6)
            for c in range(6)
        ],
    }
    path = tmp_path / "bad_bundle.json"
    path.write_text(dump_document(bundle))
    result = run_cli("construct", "module-group", "--input", str(path))
    assert result.returncode == 1
    doc = json.loads(result.stdout)
    assert doc["classification"]["is_nrack"] is False
    assert doc["counterexamples"]["left_distributive"] is not None
    assert doc["table"]["size"] == 18


def test_check_one_element_table(tmp_path):
    path = tmp_path / "one.json"
    path.write_text(
        dump_document({"arity": 3, "size": 1, "basepoint": 0, "table": [0]})
    )
    result = run_cli("check", "--input", str(path))
    assert result.returncode == 0
    flags = json.loads(result.stdout)["classification"]
    assert all(flags.values())


def test_homology_one_element_all_degrees(tmp_path):
    path = tmp_path / "one.json"
    path.write_text(
        dump_document({"arity": 2, "size": 1, "basepoint": None, "table": [0]})
    )
    result = run_cli("homology", "--input", str(path), "--degrees", "1-3")
    assert result.returncode == 0
    for line in result.stdout.strip().split("\n"):
        doc = json.loads(line)
        assert doc["free_rank"] == 1 and doc["torsion"] == []


def test_homology_dihedral_quandle(workspace):
    result = run_cli("homology", "--input", str(workspace["dihedral"]),
                     "--variant", "Q", "--degrees", "2,3")
    assert result.returncode == 0
    lines = [json.loads(line) for line in result.stdout.strip().split("\n")]
    assert lines[0] == {"coefficients": "Z", "degree": 2, "free_rank": 0,
                        "torsion": [], "variant": "Q"}
    assert lines[1] == {"coefficients": "Z", "degree": 3, "free_rank": 0,
                        "torsion": [3], "variant": "Q"}


def test_homology_degree_range_syntax(workspace):
    result = run_cli("homology", "--input", str(workspace["dihedral"]),
                     "--degrees", "1-3", "--coefficients", "Z/3")
    assert result.returncode == 0
    assert len(result.stdout.strip().split("\n")) == 3


def test_homology_variant_gate_exit_1(tmp_path):
    z4 = tmp_path / "z4.json"
    assert run_cli("construct", "z4", "--n", "3", "--output", str(z4)).returncode == 0
    result = run_cli("homology", "--input", str(z4), "--variant", "Q", "--degrees", "2")
    assert result.returncode == 1
    assert "n-quandle" in result.stderr


def test_homology_budget_exit_3(workspace, tmp_path):
    conj = tmp_path / "conj.json"
    assert run_cli("construct", "conj", "--group", str(workspace["s3"]), "--n", "3",
                   "--output", str(conj)).returncode == 0
    result = run_cli("homology", "--input", str(conj), "--degrees", "2")
    assert result.returncode == 3
    assert "budget" in result.stderr


def test_cohomology_command(workspace):
    result = run_cli("cohomology", "--input", str(workspace["dihedral"]),
                     "--variant", "Q", "--degrees", "3", "--coefficients", "Z/3")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["torsion"] == [3]


def test_dump_matrices(workspace, tmp_path):
    outdir = tmp_path / "mats"
    result = run_cli("homology", "--input", str(workspace["dihedral"]),
                     "--degrees", "2", "--dump-matrices", str(outdir))
    assert result.returncode == 0
    text = (outdir / "boundary_R_2.txt").read_text()
    assert text.startswith("3 9\n")
    assert (outdir / "boundary_R_3.txt").exists()


def test_assoc_group_command(tmp_path):
    z4 = tmp_path / "z4.json"
    assert run_cli("construct", "z4", "--n", "3", "--output", str(z4)).returncode == 0
    result = run_cli("assoc-group", "--input", str(z4))
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["presentation"]["generators"] == 4
    assert doc["abelianization"] == {"free_rank": 2, "torsion": []}
    flagged = run_cli("assoc-group", "--input", str(z4), "--paper-relator")
    assert flagged.returncode == 0
    assert json.loads(flagged.stdout)["presentation"]["relators"] != doc["presentation"]["relators"]


def test_assoc_group_invalid_table_exit_1(workspace):
    assert run_cli("assoc-group", "--input", str(workspace["mod2"])).returncode == 1


def test_leibniz_nambu(workspace):
    result = run_cli("leibniz", "--input", str(workspace["nambu"]))
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["fundamental_identity"] and doc["filippov"] and doc["self_derivation"]
    assert doc["multilinearity_probe"] is True and doc["witness"] is None


def test_leibniz_mutant_exit_1_with_witness(workspace, tmp_path):
    doc = json.loads(workspace["nambu"].read_text())
    for entry in doc["constants"]:
        if entry["args"] == [0, 1, 2]:
            entry["value"] = "2"
    path = tmp_path / "mutant.json"
    path.write_text(dump_document(doc))
    result = run_cli("leibniz", "--input", str(path))
    assert result.returncode == 1
    out = json.loads(result.stdout)
    assert out["fundamental_identity"] is False
    assert out["witness"] is not None
    assert out["self_derivation"] is False


def test_leibniz_operator_file(workspace, tmp_path):
    op = tmp_path / "op.json"
    op.write_text(dump_document({"dimension": 4, "matrix": [["0"] * 4 for _ in range(4)]}))
    result = run_cli("leibniz", "--input", str(workspace["nambu"]), "--operator", str(op))
    assert result.returncode == 0
    assert json.loads(result.stdout)["derivation"] is True
    bad = tmp_path / "bad_op.json"
    bad.write_text(dump_document({"dimension": 3, "matrix": [["0"] * 3 for _ in range(3)]}))
    assert run_cli("leibniz", "--input", str(workspace["nambu"]),
                   "--operator", str(bad)).returncode == 2


def test_leibniz_zero_tensor(tmp_path):
    path = tmp_path / "zero.json"
    path.write_text(dump_document({"dimension": 3, "arity": 3, "constants": []}))
    assert run_cli("leibniz", "--input", str(path)).returncode == 0


def test_enumerate_command():
    result = run_cli("enumerate", "--n", "2", "--m", "2")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["count_total"] == 2 and doc["count_up_to_iso"] == 2
    assert doc["representatives"] == [[0, 1, 0, 1], [1, 0, 1, 0]]


def test_enumerate_budget_exit_3():
    result = run_cli("enumerate", "--n", "2", "--m", "3", "--budget", "5")
    assert result.returncode == 3
    assert result.stdout == ""


def test_inner_command(tmp_path):
    z4 = tmp_path / "z4.json"
    assert run_cli("construct", "z4", "--n", "3", "--output", str(z4)).returncode == 0
    result = run_cli("inner", "--input", str(z4))
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["orbits"] == [[0, 2], [1, 3]]
    assert doc["inner_maps"][0] == {"args": [0, 0], "permutation": [0, 1, 2, 3]}
    assert len(doc["inner_maps"]) == 16


def test_repeated_runs_byte_identical(workspace):
    for args in (
        ("check", "--input", str(workspace["dihedral"])),
        ("homology", "--input", str(workspace["dihedral"]), "--variant", "Q",
         "--degrees", "1-3", "--coefficients", "Z/3"),
        ("assoc-group", "--input", str(workspace["dihedral"])),
        ("leibniz", "--input", str(workspace["nambu"])),
        ("enumerate", "--n", "2", "--m", "3"),
        ("inner", "--input", str(workspace["dihedral"])),
    ):
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode


def test_seed_is_echoed(workspace):
    result = run_cli("leibniz", "--input", str(workspace["nambu"]), "--seed", "7")
    assert json.loads(result.stdout)["seed"] == 7
