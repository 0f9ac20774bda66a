"""Command-line interface: exit codes, document layout, determinism."""

import json
import subprocess
import sys

import pytest

from monadcert.cli import main


COUNTEREXAMPLE = {
    "name": "O11 counterexample",
    "factors": [1, 1],
    "terms": {
        "a": [[[-1, -1], 1]],
        "m": [[[1, 1], 1], [[-2, -2], 2], [[0, 0], 1]],
        "c": [[[1, 1], 1]],
    },
    "polarization": [1, 1],
}


def run(*argv):
    return main(list(argv))


def test_build_writes_document(tmp_path):
    assert run("build", "--family", "section3", "--copies", "1,1",
               "--k", "1", "--out-dir", str(tmp_path)) == 0
    doc = json.loads((tmp_path / "section3-dims1x3-k1.build.json").read_text())
    assert list(doc) == ["kind", "tool", "version", "instance", "result"]
    assert doc["kind"] == "monad-build"
    assert doc["tool"] == "monadcert"
    assert doc["instance"] == {"family": "section3", "dims": [1, 3], "k": 1}
    assert doc["result"]["instance_id"] == "section3-dims1x3-k1"
    assert doc["result"]["display"]["rank_e"] == 6


def test_verify_document_and_exit(tmp_path):
    assert run("verify", "--family", "section3", "--copies", "2",
               "--k", "1", "--out-dir", str(tmp_path)) == 0
    doc = json.loads((tmp_path / "section3-dims1x1-k1.report.json").read_text())
    assert doc["kind"] == "monad-report"
    assert doc["result"]["valid"] is True
    assert doc["result"]["composite_zero"] is True


def test_certify_stability_stable(tmp_path):
    assert run("certify-stability", "--family", "section3", "--copies", "1,1",
               "--k", "2", "--out-dir", str(tmp_path)) == 0
    doc = json.loads((tmp_path / "section3-dims1x3-k2.stability.json").read_text())
    assert doc["kind"] == "stability-certificate"
    assert doc["result"]["verdict"] == "stable"
    assert doc["result"]["rank_t"] == 8
    assert doc["result"]["slope_t"] == "-1/1"


def test_certify_stability_counterexample(tmp_path):
    spec_file = tmp_path / "ce.json"
    spec_file.write_text(json.dumps(COUNTEREXAMPLE))
    code = run("certify-stability", "--family", "custom",
               "--spec-file", str(spec_file), "--out-dir", str(tmp_path))
    assert code == 1
    doc = json.loads((tmp_path / "custom-o11-counterexample.stability.json").read_text())
    assert doc["result"]["verdict"] == "fails"
    failed = [q for q in doc["result"]["per_q"] if not q["passed"]]
    assert failed[0]["witness_twist"] == [-1, -1]


def test_certify_simplicity_writes_both_documents(tmp_path):
    assert run("certify-simplicity", "--family", "section3", "--copies", "1,1",
               "--k", "1", "--out-dir", str(tmp_path)) == 0
    stab = json.loads((tmp_path / "section3-dims1x3-k1.stability.json").read_text())
    simp = json.loads((tmp_path / "section3-dims1x3-k1.simplicity.json").read_text())
    assert stab["result"]["verdict"] == "stable"
    assert simp["kind"] == "simplicity-certificate"
    assert simp["result"]["verdict"] == "simple"
    assert simp["result"]["h0_endo"] == 1


def test_certify_simplicity_inconclusive_exit(tmp_path):
    code = run("certify-simplicity", "--family", "section3", "--copies", "2",
               "--k", "1", "--out-dir", str(tmp_path))
    assert code == 1
    doc = json.loads((tmp_path / "section3-dims1x1-k1.simplicity.json").read_text())
    assert doc["result"]["verdict"] == "inconclusive"
    assert doc["result"]["h0_endo"] is None


def test_cohom_prints_dimension(capsys):
    assert run("cohom", "--space", "1,3", "--degree=-2,-4", "--p", "4") == 0
    assert capsys.readouterr().out == "1\n"
    assert run("cohom", "--space", "1,3", "--degree", "1,1", "--p", "0") == 0
    assert capsys.readouterr().out == "8\n"


def test_cohom_multiplicities(capsys):
    code = run("cohom", "--space", "1", "--degree", "1", "--mult", "2", "--p", "0")
    assert code == 0
    assert capsys.readouterr().out == "4\n"
    # mult count must match degree count when given
    assert run("cohom", "--space", "1", "--degree", "1", "--degree", "2",
               "--mult", "2", "--p", "0") == 2
    assert run("cohom", "--space", "1", "--degree", "1", "--degree", "2",
               "--mult", "2", "--mult", "1", "--p", "0") == 0
    assert capsys.readouterr().out.endswith("7\n")  # 2*h0(O(1)) + h0(O(2))


def test_negative_list_values_accepted(capsys):
    # "--degree -2,0" would normally be eaten as a flag; the folding step fixes it
    assert run("cohom", "--space", "1,1", "--degree", "-2,-2", "--p", "2") == 0
    assert capsys.readouterr().out == "1\n"


def test_recheck_accepts_fresh_documents(tmp_path, capsys):
    run("certify-simplicity", "--family", "section3", "--copies", "1,1",
        "--k", "1", "--out-dir", str(tmp_path))
    files = sorted(tmp_path.glob("*.json"))
    assert len(files) == 2
    assert run("recheck", *map(str, files)) == 0


def test_recheck_flags_tampering(tmp_path):
    run("certify-stability", "--family", "section3", "--copies", "1,1",
        "--k", "1", "--out-dir", str(tmp_path))
    path = tmp_path / "section3-dims1x3-k1.stability.json"
    doc = json.loads(path.read_text())
    doc["result"]["verdict"] = "fails"
    path.write_text(json.dumps(doc, indent=2) + "\n")
    assert run("recheck", str(path)) == 1


def test_documents_are_deterministic(tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    for out in (a, b):
        out.mkdir()
        run("certify-simplicity", "--family", "section4", "--n", "1", "--m", "1",
            "--l", "1", "--alpha", "1", "--beta", "1", "--gamma", "1", "--k", "1",
            "--out-dir", str(out))
    name = "section4-n1-m1-l1-alpha1-beta1-gamma1-k1.simplicity.json"
    assert (a / name).read_bytes() == (b / name).read_bytes()


def test_out_dir_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("MONADCERT_OUT", str(tmp_path))
    assert run("build", "--family", "section3", "--copies", "1,1", "--k", "1") == 0
    assert (tmp_path / "section3-dims1x3-k1.build.json").exists()


def test_custom_spec_with_embedded_maps(tmp_path):
    # a tiny genuine monad supplied entirely through the spec file
    spec = {
        "name": "inline maps",
        "factors": [1],
        "letters": ["x"],
        "terms": {
            "a": [[[-1], 1]],
            "m": [[[0], 2]],
            "c": [[[1], 1]],
        },
        "maps": {
            "g": {
                "entries": [[[[1, [1, 0]]], [[1, [0, 1]]]]],
                "row_labels": [[1]],
                "col_labels": [[0], [0]],
            },
            "f": {
                "entries": [[[[-1, [0, 1]]]], [[[1, [1, 0]]]]],
                "row_labels": [[0], [0]],
                "col_labels": [[-1]],
            },
        },
        "polarization": [1],
    }
    p = tmp_path / "inline.json"
    p.write_text(json.dumps(spec))
    code = run("verify", "--family", "custom", "--spec-file", str(p),
               "--out-dir", str(tmp_path))
    # composite checks out, but with no witness families the everywhere-rank
    # claim stays uncovered, so the overall verdict is honestly negative
    assert code == 1
    doc = json.loads((tmp_path / "custom-inline-maps.report.json").read_text())
    assert doc["result"]["composite_zero"] is True
    assert doc["result"]["valid"] is False
    assert doc["result"]["map_g"]["rank"]["max_rank_seen"] == 1


def test_error_exits(tmp_path):
    # missing required parameter for the family
    assert run("build", "--family", "section3", "--k", "1",
               "--out-dir", str(tmp_path)) == 2
    # unusable geometry
    assert run("build", "--family", "section3", "--copies", "1", "--k", "1",
               "--out-dir", str(tmp_path)) == 2
    # malformed JSON reports a position instead of crashing
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert run("verify", "--family", "custom", "--spec-file", str(bad),
               "--out-dir", str(tmp_path)) == 2
    # missing file
    assert run("verify", "--family", "custom", "--spec-file",
               str(tmp_path / "absent.json"), "--out-dir", str(tmp_path)) == 2


def test_selftest_passes(capsys):
    assert run("selftest") == 0
    out = capsys.readouterr().out
    assert "monad-validity: pass" in out


def test_console_script_version():
    proc = subprocess.run(
        [sys.executable, "-m", "monadcert.cli", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "monadcert 0.1.0"
