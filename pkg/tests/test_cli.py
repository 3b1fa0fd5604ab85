"""Command-line interface: exit codes, reports, determinism."""

import json

from phasedmatroids.cli import run

from conftest import FIXTURES, load_fixture


def invoke(capsys, *args):
    code = run(list(args))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_validate_good_phirotope(capsys):
    code, report = invoke(capsys, "validate",
                          "--input", str(FIXTURES / "nonreal2ex_phirotope.json"))
    assert code == 0
    assert report["result"]["valid"] is True
    assert report["provenance"]["tolerance"] == 1e-9
    assert "input_sha256" in report["provenance"]


def test_validate_corrupted_phirotope(tmp_path, capsys):
    doc = load_fixture("nonreal2ex_phirotope.json")
    for item in doc["values"]:
        if item["basis"] == [3, 4]:
            item["phase"] = {"angle_over_pi": 0.4}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, report = invoke(capsys, "validate", "--input", str(path))
    assert code == 1
    assert report["result"]["valid"] is False
    assert report["result"]["violations"]


def test_realize_nonrealizable(capsys):
    code, report = invoke(capsys, "realize",
                          "--input", str(FIXTURES / "nonreal2ex_phirotope.json"))
    assert code == 1
    assert report["result"]["verdict"] == "NotRealizable"
    assert report["result"]["witness"]["basis"] == [4, 5]


def test_realize_realizable(capsys):
    code, report = invoke(capsys, "realize",
                          "--input", str(FIXTURES / "realizable_rank3_phirotope.json"))
    assert code == 0
    assert report["result"]["verdict"] == "Realizable"
    assert report["result"]["matrix"]["rows"] == 3


def test_realize_not_uniform(capsys):
    code, report = invoke(capsys, "realize",
                          "--input", str(FIXTURES / "runex_phirotope.json"))
    assert code == 3
    assert report["result"]["verdict"] == "Unsupported"
    assert report["result"]["reason"] == "not_uniform"


def test_from_matrix_then_orient_check(tmp_path, capsys):
    out_path = tmp_path / "phi.json"
    code = run(["from-matrix", "--input", str(FIXTURES / "runex_matrix.json"),
                "--output", str(out_path)])
    assert code == 0
    phi_doc = json.loads(out_path.read_text())["result"]["phirotope"]
    phi_path = tmp_path / "runex_phi.json"
    phi_path.write_text(json.dumps(phi_doc))
    code, report = invoke(capsys, "orient-check", "--input", str(phi_path))
    assert code == 0
    assert report["result"]["essentially_oriented"] is True


def test_canonicalize_and_tree(capsys):
    code, report = invoke(capsys, "canonicalize",
                          "--input", str(FIXTURES / "nonreal2ex_phirotope.json"))
    assert code == 0
    assert len(report["result"]["rho"]) == 5
    code, report = invoke(capsys, "tree",
                          "--input", str(FIXTURES / "nonreal2ex_phirotope.json"))
    assert code == 0
    assert report["result"]["forest"] == [[1, 3], [2, 3], [2, 4], [2, 5]]


def test_verify_command(tmp_path, capsys):
    doc = {"phirotope": load_fixture("realizable_rank3_phirotope.json"),
           "matrix": load_fixture("realizable_rank3_canonical_matrix.json")}
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(doc))
    code, report = invoke(capsys, "verify", "--input", str(path))
    assert code == 0
    assert report["result"]["realizes"] is True


def test_malformed_input(tmp_path, capsys):
    path = tmp_path / "garbage.json"
    path.write_text("{not json")
    code, report = invoke(capsys, "validate", "--input", str(path))
    assert code == 2
    assert "error" in report
    code, report = invoke(capsys, "validate", "--input", str(tmp_path / "missing.json"))
    assert code == 2


def test_output_deterministic(capsys):
    args = ("realize", "--input", str(FIXTURES / "nonreal2ex_phirotope.json"))
    run(list(args))
    first = capsys.readouterr().out
    run(list(args))
    second = capsys.readouterr().out
    assert first == second
    run(list(args) + ["--threads", "4"])
    assert capsys.readouterr().out == first
