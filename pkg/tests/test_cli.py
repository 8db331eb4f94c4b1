import io
import json
import subprocess
import sys

import pytest

from jellyspec.cli import main
from jellyspec.graph import jellyfish
from jellyspec.graph6 import graph6_decode, graph6_encode


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, out=out, inp=io.StringIO(stdin))
    return code, out.getvalue()


def test_gen_jellyfish():
    code, out = run(["gen", "jellyfish", "--p", "1", "--q", "3"])
    assert code == 0
    assert graph6_decode(out.strip()) == jellyfish(1, 3)


@pytest.mark.parametrize(
    "argv, n, m",
    [
        (["gen", "sun", "--q", "5"], 10, 10),
        (["gen", "cycle", "--q", "6"], 6, 6),
        (["gen", "star", "--p", "4"], 5, 4),
        (["gen", "path", "--n", "4"], 4, 3),
        (["gen", "complete", "--n", "5"], 5, 10),
        (["gen", "empty", "--n", "3"], 3, 0),
        (["gen", "union", "C4", "K1"], 5, 4),
        (["gen", "join", "K1", "C5"], 6, 10),
    ],
)
def test_gen_families(argv, n, m):
    code, out = run(argv)
    g = graph6_decode(out.strip())
    assert code == 0 and (g.n, g.m) == (n, m)


def test_gen_stdin_transforms():
    g6 = graph6_encode(jellyfish(1, 3))
    code, out = run(["gen", "line-graph"], g6 + "\n")
    assert code == 0 and graph6_decode(out.strip()).n == 6
    code, out = run(["gen", "complement"], g6 + "\n")
    assert graph6_decode(out.strip()).m == 15 - 6


def test_spec_float_pipeline():
    _, g6 = run(["gen", "jellyfish", "--p", "1", "--q", "3"])
    code, out = run(["spec", "--matrix", "q", "--float"], g6)
    assert code == 0
    values = {}
    for tok in out.split():
        v, k = tok.split("×")
        values[round(float(v), 5)] = int(k)
    assert values == {5.23607: 1, 2.61803: 2, 0.76393: 1, 0.38197: 2}


def test_spec_exact():
    code, out = run(["spec", "--matrix", "a"], "Bw\n")
    assert code == 0 and out.strip() == "-2 -3 0 1"


def test_invariants_formats():
    g6 = graph6_encode(jellyfish(1, 3)) + "\n"
    code, out = run(["invariants"], g6)
    assert code == 0 and "det_q=4" in out.splitlines()
    code, out = run(["invariants", "--format", "json"], g6)
    assert json.loads(out)["spanning_trees"] == 3


def test_cospectral_exit_codes(tmp_path):
    _, star = run(["gen", "star", "--p", "4"])
    _, union = run(["gen", "union", "C4", "K1"])
    both = tmp_path / "pair.g6"
    both.write_text(star + union)
    assert run(["cospectral", "--matrix", "a", str(both)])[0] == 0
    code, out = run(["cospectral", "--matrix", "l", str(both)])
    assert code == 1 and out.strip() == "not cospectral"
    a, b = tmp_path / "a.g6", tmp_path / "b.g6"
    a.write_text(star)
    b.write_text(union)
    assert run(["cospectral", "--matrix", "a", str(a), str(b)])[0] == 0
    assert run(["cospectral", "--matrix", "a", str(a), "-"], union)[0] == 0
    assert run(["cospectral", "--matrix", "a", str(a)])[0] == 65
    assert run(["cospectral", "--matrix", "a", str(tmp_path / "missing")])[0] == 65


def test_search_reports():
    code, out = run(["search", "--target", "S4", "--matrix", "a"])
    assert code == 0 and "mate=DBW" in out.splitlines()
    code, out = run(["search", "--target", "S4", "--matrix", "a", "--format", "json", "--jobs", "2"])
    assert json.loads(out)["non_isomorphic_mates"] == ["DBW"]
    code, out = run(["search", "--target", "S4", "--matrix", "a", "--candidates", "-"], "DBW\nDQc\n")
    assert code == 0 and "candidates_examined=2" in out.splitlines()


def test_verify_default_grid():
    code, out = run(["verify", "--suite", "dqs"])
    lines = out.splitlines()
    assert code == 0
    assert "PASS dqs JFG(1,3)" in out and "SKIP dqs JFG(2,4)" in out
    assert lines[-1] == "PASS total failures=0"


def test_verify_multiple_suites_and_failure():
    code, out = run(["verify", "--suite", "thm2.2", "--suite", "lemma2.12", "--grid", "p=1,q=3..5"])
    assert code == 0 and out.count("PASS thm2.2") == 3
    # the stated interval for mu_1 misses even-cycle jellyfish
    code, out = run(["verify", "--suite", "lemma3.1", "--grid", "p=1,q=4"])
    assert code == 1 and out.startswith("FAIL lemma3.1 JFG(1,4)")


def test_probe():
    code, out = run(["probe", "--p", "1", "--q", "3"])
    assert code == 0 and "mates=0" in out and "evidence only" in out


@pytest.mark.parametrize(
    "argv, stdin, code",
    [
        ([], "", 64),
        (["bogus"], "", 64),
        (["gen", "jellyfish", "--p", "1"], "", 64),
        (["gen", "jellyfish", "--p", "0", "--q", "3"], "", 64),
        (["gen", "union", "C4"], "", 64),
        (["spec", "--matrix", "x"], "", 64),
        (["spec", "--matrix", "a", "--exact", "--float"], "", 64),
        (["spec", "--matrix", "a"], "B!\n", 65),
        (["gen", "complement"], "Bx\n", 65),
        (["search", "--target", "K11", "--matrix", "q"], "", 66),
        (["search", "--target", "S4", "--matrix", "a", "--n", "6"], "", 64),
        (["search", "--target", "S4", "--matrix", "a", "--jobs", "0"], "", 64),
        (["verify", "--suite", "dqs", "--grid", "p=1"], "", 64),
        (["verify", "--suite", "nope"], "", 64),
        (["probe", "--p", "1", "--q", "4"], "", 64),
        (["probe", "--p", "3", "--q", "3"], "", 66),
    ],
)
def test_error_statuses(argv, stdin, code):
    assert run(argv, stdin)[0] == code


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "jellyspec", "gen", "cycle", "--q", "4"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout.strip() == graph6_encode(graph6_decode(proc.stdout.strip()))
    proc = subprocess.run([sys.executable, "-m", "jellyspec", "spec"], capture_output=True, text=True, check=False)
    assert proc.returncode == 64
