import io
import json
from importlib import resources

import pytest

from doodlekit.cli import main

KISHINO_PATH = str(resources.files("doodlekit").joinpath("data/kishino.gauss"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(capsys, tmp_path):
    assert run(capsys, "validate", "-i", KISHINO_PATH)[:2] == (0, "OK n=4\n")
    code, out, _ = run(capsys, "validate", "--inline", "a b a | a=+1 b=+1")
    assert code == 2 and out.startswith("ERROR token 3:")
    empty = tmp_path / "empty.gauss"
    empty.write_text("")
    code, out, _ = run(capsys, "validate", "-i", str(empty))
    assert code == 0 and "n=0" in out and "trivial" in out


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("a a | a=+1\n"))
    assert run(capsys, "genus", "-i", "-")[1] == "m=1 boundary=3 genus=0\n"


def test_matrix(capsys):
    code, out, _ = run(capsys, "matrix", "--inline", "a a | a=+1")
    assert code == 0
    assert out == "# labels: a\n1\n0\n0\n# irreducible form\n0\n\n"
    code, out, _ = run(capsys, "matrix", "--inline", "a b b c c a | +1 +1 -1", "--format", "structured")
    tree = json.loads(out)
    assert tree["matrix"]["B"] == [[0, 0, 0]] * 3 and tree["irreducible"]["n"] == 0


def test_matrix_kishino_structured(capsys):
    code, out, _ = run(capsys, "matrix", "-i", KISHINO_PATH, "--format", "structured")
    tree = json.loads(out)
    assert tree["matrix"]["n"] == 4 and tree["irreducible"]["n"] == 4
    assert sorted(tree["matrix"]["A"]) == [-1, -1, 1, 1]


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "-i", KISHINO_PATH)
    assert code == 0 and out.startswith("NON-CLASSICAL (matrix obstruction)")
    code, out, _ = run(capsys, "classify", "--inline", "a a | a=+1")
    assert out.startswith("INCONCLUSIVE (trivial invariant class)")
    code, out, _ = run(capsys, "classify", "--inline", "a b a b | +1 +1")
    # the two arcs from b to a bound a bigon, so the class is trivial
    assert out.startswith("INCONCLUSIVE") and "genus=1" in out


def test_genus_human_and_structured_agree(capsys):
    _, human, _ = run(capsys, "genus", "--inline", "a b a b | +1 +1")
    _, structured, _ = run(capsys, "genus", "--inline", "a b a b | +1 +1", "--format", "structured")
    tree = json.loads(structured)
    assert human == f"m={tree['n_crossings']} boundary={tree['boundary_components']} genus={tree['genus']}\n"
    assert (tree["boundary_components"], tree["genus"]) == (2, 1)


def test_reduce_and_moves(capsys):
    code, out, _ = run(capsys, "reduce", "--inline", "a b b a | a=+1 b=-1", "--format", "structured")
    tree = json.loads(out)
    assert tree["irreducible"]["n"] == 0 and len(tree["trace"]) >= 1
    code, out, _ = run(capsys, "moves", "--inline", "a a | a=+1")
    assert out == "monogon a at 0 1\n"
    code, out, _ = run(capsys, "moves", "-i", KISHINO_PATH)
    assert out == "no moves\n"


def test_virtualize_verb(capsys):
    code, out, _ = run(capsys, "virtualize", "--inline", "a b a b | +1 +1", "--at", "a")
    assert code == 0 and out.rstrip().endswith("MATCH") and "a b a b | a=-1 b=+1" in out
    code, out, _ = run(capsys, "virtualize", "-i", KISHINO_PATH, "--format", "structured")
    tree = json.loads(out)
    assert len(tree["virtualizations"]) == 4 and all(v["match"] for v in tree["virtualizations"])
    assert run(capsys, "virtualize", "-i", KISHINO_PATH, "--at", "zz")[0] == 2


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "genus")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "genus", "-i", str(tmp_path / "missing"))[0] == 2
    assert run(capsys, "genus", "--inline", "a a | +1", "-i", KISHINO_PATH)[0] == 2


def test_corpus_is_deterministic(capsys, tmp_path):
    args = ["corpus", "--seed", "4", "--count", "6", "--max-crossings", "4"]
    first = run(capsys, *args, "-o", str(tmp_path / "c1.txt"))
    second = run(capsys, *args, "-o", str(tmp_path / "c2.txt"))
    assert (tmp_path / "c1.txt").read_text() == (tmp_path / "c2.txt").read_text()
    strip = lambda s: "\n".join(ln for ln in s.splitlines() if not ln.startswith("# corpus"))
    assert strip(first[1]) == strip(second[1])
    # the only failing line is the golden genus
    assert first[0] == 1
    assert "0 violations" in first[1]
    assert "kishino genus: FAIL" in first[1]

    code, out, _ = run(capsys, "verify", "-i", str(tmp_path / "c1.txt"))
    assert code == 0 and out.endswith("0 violations\n")


def test_verify_reports_offending_code(capsys, tmp_path, monkeypatch):
    from doodlekit import suite

    def broken(code, rng=None):
        return [suite.Violation("surface", "a a | a=+1", "synthetic", ("step one",))]

    monkeypatch.setitem(suite.CHECKS, "surface", broken)
    f = tmp_path / "one.txt"
    f.write_text("a a | a=+1\n")
    code, out, _ = run(capsys, "verify", "-i", str(f))
    assert code == 1
    assert "VIOLATION surface: a a | a=+1: synthetic" in out and "    step one" in out
