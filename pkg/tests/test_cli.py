import json

import pytest

from tameblocks.catalog import family_block, template
from tameblocks.cli import main
from tameblocks.matrices import matrix_to_document


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def machine(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "machine")
    return code, (json.loads(out) if out.strip() else None), err


def test_core(capsys):
    assert run(capsys, "core", "8,1") == (0, "core=2,1 weight=3\n", "")
    code, doc, _ = machine(capsys, "core", "5,3,1", "--ell", "3")
    assert code == 0 and doc["ell"] == 3 and doc["weight"] * 3 + sum(map(int, doc["core"].split(","))) == 9


def test_altblocks(capsys):
    code, out, _ = run(capsys, "altblocks", "5..20")
    assert code == 0
    assert out.splitlines()[-1] == "true at: 6, 7, 9, 12, 16"
    assert "n=8 false" in out
    code, doc, _ = machine(capsys, "altblocks", "5..60")
    assert doc["true_at"] == [6, 7, 9, 12, 16, 21, 27, 34, 42, 51]


def test_batch_bundled(capsys):
    code, out, _ = run(capsys, "batch", "sporadic-dihedral")
    assert code == 0
    assert "sporadic-dihedral: 8/8 match" in out
    code, doc, _ = machine(capsys, "batch", "sporadic-semidihedral")
    assert code == 0 and doc["passed"] == doc["total"] == 3
    (monster,) = [r for r in doc["records"] if r["group"] == "M"]
    assert sorted(monster["matched"]) == ["3B2", "3C2,1"]


def test_batch_file_with_failure(capsys, tmp_path):
    path = tmp_path / "x.jsonl"
    path.write_text('{"group": "g", "n": 3, "characters": [["1", 4], ["2", 1]], "expected": ["3A"]}\n')
    code, out, _ = run(capsys, "batch", str(path))
    assert code == 1 and out.startswith("FAIL")


def test_classify_degrees(capsys):
    code, out, _ = run(capsys, "classify", "--degrees", "1920,4352,6272,6528,10880", "--n", "3", "--shortcut")
    assert code == 0
    assert "dihedral 3B" in out and "shortcut: 3B (agrees)" in out
    code, doc, _ = machine(capsys, "classify", "--degrees", "1,1,1,1,2", "--n", "3", "--family", "dihedral")
    assert [s["tag"] for s in doc["solutions"]] == ["1A"]
    assert doc["solutions"][0]["matrix"]["brauer"] == ["1"]


def test_classify_file_and_stdin(capsys, tmp_path, monkeypatch):
    import io
    line = '{"group": "He", "n": 3, "characters": [["1920", 1], ["4352", 1], ["6272", 1], ["6528", 1], ["10880", 1]]}\n'
    path = tmp_path / "he.jsonl"
    path.write_text(line)
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0 and out.startswith("He (n=3)")
    monkeypatch.setattr("sys.stdin", io.StringIO(line + line.replace('"He"', '"He2"')))
    code, doc, _ = machine(capsys, "classify", "-")
    assert [d["group"] for d in doc] == ["He", "He2"]


def test_classify_no_match(capsys):
    code, out, _ = run(capsys, "classify", "--degrees", "1,3,5,7,9", "--n", "3")
    assert code == 1 and "no tame template fits" in out


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "3K", "--family", "dihedral")
    assert code == 0 and out.startswith("dihedral 3K  n=3  k=5  l=3")
    code, out, _ = run(capsys, "catalog", "3H", "--family", "semidihedral", "--n", "5")
    assert "no blocks in this class" in out
    code, doc, _ = machine(capsys, "catalog", "--list")
    assert len(doc) == 25
    code, doc, _ = machine(capsys, "catalog", "2A", "--family", "quaternion", "--n", "5")
    assert doc["k"] == 12


def test_poly(capsys):
    assert run(capsys, "poly", "is-cyclotomic", "q^2+q-1")[1] == "not cyclotomic\n"
    assert run(capsys, "poly", "cyclotomic", "12")[1] == "q^4-q^2+1\n"
    assert run(capsys, "poly", "roots", "q^2-3q+2")[1] == "1 2\n"
    assert run(capsys, "poly", "eval", "q^2+1", "--q", "7")[1] == "50\n"
    assert run(capsys, "poly", "v2", "97976320")[1] == "16\n"
    assert run(capsys, "poly", "bound", "2q^2-7q+3")[1].startswith("root bound 7")
    code, doc, _ = machine(capsys, "poly", "coincide", "q^2-1", "--group", "psl2")
    assert code == 0 and isinstance(doc["hits"], list)


def test_poly_coincide_table_file(capsys, tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("# degrees\nq^2+q-3\n")
    code, out, _ = run(capsys, "poly", "coincide", "q^2-1", "--table", str(path))
    assert out == "q=2 entry 0: q^2+q-3\n"
    code, out, _ = run(capsys, "poly", "coincide", "q^2-1", "--table", str(path), "--q-min", "3")
    assert out == "no coincidences\n"


def test_extend_up_and_down(capsys, tmp_path):
    src = tmp_path / "psl7.json"
    src.write_text(json.dumps(matrix_to_document(family_block("psl2", 7).matrix)))
    code, out, _ = run(capsys, "extend", str(src), "--k", "7", "--l", "2")
    assert code == 0 and out.startswith("candidate 1: column orbits [(0,), (1, 2)]")
    code, doc, _ = machine(capsys, "extend", str(src), "--k", "8", "--l", "2")
    assert code == 1 and doc == []

    gu = tmp_path / "gu3.json"
    gu.write_text(json.dumps(matrix_to_document(family_block("gu2", 3).matrix)))
    code, doc, _ = machine(capsys, "extend", str(gu), "--k", "14", "--l", "3", "--direction", "down")
    assert code == 0 and doc


def test_extend_cap(capsys, tmp_path):
    src = tmp_path / "m.json"
    m = template("dihedral", "1A", 6).instantiate((1,))
    src.write_text(json.dumps(matrix_to_document(m)))
    code, _, err = run(capsys, "extend", str(src), "--k", str(2 * m.k - 9), "--l", "1", "--cap", "5")
    assert code == 2 and "cap" in err


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "family generators: ok" in out


@pytest.mark.parametrize("argv", [
    ["core", "1,2"],
    ["core", "3", "--ell", "1"],
    ["altblocks", "x..y"],
    ["altblocks", "3..8"],
    ["catalog", "9Z", "--family", "dihedral"],
    ["catalog", "3A"],
    ["classify"],
    ["classify", "--degrees", "1,2"],
    ["classify", "/nonexistent/file.jsonl"],
    ["poly", "roots", "q^^2"],
    ["poly", "eval", "q"],
    ["batch", "no-such-file.jsonl"],
])
def test_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error: ")


def test_machine_errors_are_json(capsys, tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"group": "g", "n": 3, "characters": [["x", 1]]}\n')
    code, out, err = run(capsys, "classify", str(path), "--format", "machine")
    assert code == 2 and out == ""
    rec = json.loads(err)
    assert rec["kind"] == "DatasetError" and rec["line"] == 1 and rec["field"] == "characters[0]"


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "tameblocks", "core", "8,1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "core=2,1 weight=3\n"
