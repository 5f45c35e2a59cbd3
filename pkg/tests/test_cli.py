import json
import subprocess
import sys

import numpy as np
import pytest

from zdb import artifact
from zdb.cli import main
from zdb.core import verify_zdb
from zdb.cyclotomic import construct_coset_zdb, construct_pair_coset_zdb
from zdb.errors import ArtifactFormatError
from zdb.product import construct_product


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_coset(tmp_path, capsys):
    out = tmp_path / "c3.json"
    code, stdout, _ = run(capsys, "construct", "coset", "--m", 3, "--out", out)
    assert code == 0
    assert "(7, 3, 2) tau={1,3,3}" in stdout
    doc = json.loads(out.read_text())
    assert doc["labels"] == [0, 1, 1, 2, 1, 2, 2]
    assert doc["group"] == {"kind": "cyclic", "n": 7}
    assert doc["family"] == {"family": "coset", "m": 3}
    assert "params" not in doc


def test_construct_product(tmp_path, capsys):
    out = tmp_path / "p.json"
    code, stdout, _ = run(capsys, "construct", "product", "--q", "7", "--e", "3", "--out", out)
    assert code == 0 and stdout.startswith("(7, 3, 2)")
    doc = json.loads(out.read_text())
    assert doc["family"] == {"family": "product", "q": [7], "e": 3}
    assert doc["group"] == {"kind": "product", "q": [7]}


def test_construct_paircoset_m2_rejected(tmp_path, capsys):
    code, _, err = run(capsys, "construct", "paircoset", "--m", 2, "--out", tmp_path / "x.json")
    assert code == 2
    assert "m must be an odd prime" in err


@pytest.mark.parametrize("argv", [
    ["construct", "product", "--q", "7,13", "--e", "5"],
    ["construct", "coset", "--m", "9"],
    ["construct", "product", "--q", "12", "--e", "11"],
])
def test_construct_precondition_failures(tmp_path, capsys, argv):
    code, _, err = run(capsys, *argv, "--out", tmp_path / "x.json")
    assert code == 2 and err.count("\n") == 1


def test_verify_rewrites_params(tmp_path, capsys):
    out = tmp_path / "c5.json"
    run(capsys, "construct", "coset", "--m", 5, "--out", out)
    code, stdout, _ = run(capsys, "verify", out)
    assert code == 0 and stdout.splitlines()[0] == "(31, 7, 4)"
    doc = json.loads(out.read_text())
    assert doc["params"] == {"n": 31, "ell_bar": 7, "lambda": 4, "tau": [1] + [5] * 6}


def test_verify_non_zdb(tmp_path, capsys):
    out = tmp_path / "bad.json"
    run(capsys, "construct", "coset", "--m", 3, "--out", out)
    doc = json.loads(out.read_text())
    doc["labels"] = [0, 0, 1, 1, 2, 2, 2]
    out.write_text(json.dumps(doc))
    code, stdout, _ = run(capsys, "verify", out)
    assert code == 1
    assert "NOT ZDB" in stdout and "shift 1" in stdout


def test_verify_truncated(tmp_path, capsys):
    out = tmp_path / "c3.json"
    run(capsys, "construct", "coset", "--m", 3, "--out", out)
    text = out.read_text()
    out.write_text(text[: len(text) // 2])
    code, _, _ = run(capsys, "verify", out)
    assert code == 3


@pytest.mark.parametrize("doc", [
    {"format_version": 1, "group": {"kind": "cyclic", "n": 5}, "labels": [0, 1, 0]},
    {"format_version": 2, "group": {"kind": "cyclic", "n": 3}, "labels": [0, 1, 0]},
    {"format_version": 1, "group": {"kind": "torus"}, "labels": [0]},
    {"format_version": 1, "group": {"kind": "cyclic", "n": 3}, "labels": [0, "a", 1]},
    {"format_version": 1, "group": {"kind": "product", "q": [6]}, "labels": [0] * 6},
])
def test_malformed_artifacts(tmp_path, capsys, doc):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(doc))
    assert run(capsys, "verify", path)[0] == 3


def test_missing_file(tmp_path, capsys):
    assert run(capsys, "verify", tmp_path / "nope.json")[0] == 3


def test_ccc_report(tmp_path, capsys):
    out = tmp_path / "c3.json"
    run(capsys, "construct", "coset", "--m", 3, "--out", out)
    words = tmp_path / "words.txt"
    code, stdout, _ = run(capsys, "ccc", out, "--emit-codewords", words)
    assert code == 0
    assert stdout.strip() == "(7,7,5,[1,3,3])_3 bound=7 OPTIMAL"
    matrix = np.loadtxt(words, dtype=int)
    assert matrix.shape == (7, 7)
    assert matrix[0].tolist() == [0, 1, 1, 2, 1, 2, 2]


def test_dss_report(tmp_path, capsys):
    out = tmp_path / "pc3.json"
    run(capsys, "construct", "paircoset", "--m", 3, "--out", out)
    code, stdout, _ = run(capsys, "dss", out)
    assert code == 0
    assert stdout.splitlines()[0] == "(7,{1,6},2) PERFECT bound=5 r=7 NOT-OPTIMAL"


def test_dss_rejects_non_cyclic(tmp_path, capsys):
    out = tmp_path / "p.json"
    run(capsys, "construct", "product", "--q", "49,169", "--e", "24", "--out", out)
    code, _, err = run(capsys, "dss", out)
    assert code == 2 and "NonCyclicGroup" in err


def test_table_coset(capsys):
    code, stdout, _ = run(capsys, "table", "--family", "coset", "--m", "2,3,5,7")
    assert code == 0
    rows = stdout.splitlines()[1:]
    assert len(rows) == 4 and all("VERIFIED" in r for r in rows)
    assert "(31, 7, 4)" in rows[2]


def test_table_unverified_above_threshold(capsys):
    _, stdout, _ = run(capsys, "table", "--family", "coset", "--m", "5,7", "--max-verify-n", "100")
    rows = stdout.splitlines()[1:]
    assert "VERIFIED" in rows[0] and "UNVERIFIED" in rows[1]


def test_table_product(capsys):
    _, stdout, _ = run(capsys, "table", "--family", "product", "--q", "9,13", "--e", "2,3,4")
    rows = stdout.splitlines()[1:]
    assert "VERIFIED" in rows[0] and "REJECTED" in rows[1] and "VERIFIED" in rows[2]
    assert "(117, 30, 3)" in rows[2]


@pytest.mark.parametrize("make", [
    lambda: construct_coset_zdb(5),
    lambda: construct_pair_coset_zdb(7),
    lambda: construct_product([4, 7], 3),
    lambda: construct_product([3, 9], 2, allow_repeated_primes=True),
])
def test_round_trip(make):
    f = make()
    p = verify_zdb(f)
    g, q = artifact.loads(artifact.dumps(f, p))
    assert g == f and q == p
    assert verify_zdb(g) == p
    assert artifact.dumps(g, q) == artifact.dumps(f, p)


def test_loads_densifies_external_labels():
    doc = {"format_version": 1, "group": {"kind": "cyclic", "n": 4}, "labels": [7, 7, 3, 3]}
    f, params = artifact.loads(json.dumps(doc))
    assert f.labels.tolist() == [0, 0, 1, 1] and params is None


def test_loads_rejects_garbage():
    with pytest.raises(ArtifactFormatError):
        artifact.loads("{not json")


def test_module_entry_point(tmp_path):
    out = tmp_path / "c3.json"
    proc = subprocess.run([sys.executable, "-m", "zdb", "construct", "coset", "--m", "3", "--out", str(out)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "(7, 3, 2)" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "zdb", "verify", str(out)], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("(7, 3, 2)")
