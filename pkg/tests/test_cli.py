import json
import subprocess
import sys

import pytest

from rauzy.cli import main


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dot_to_stdout(capsys):
    code, out, _ = run(["rauzy", "--preset", "fibonacci", "--n", "2", "--dot"], capsys)
    assert code == 0
    assert out.startswith("// config-digest: ")
    assert out.count("->") == 4


def test_outputs_are_byte_identical(tmp_path, capsys):
    argv = ["fg", "--preset", "tribonacci", "--n-range", "1..3", "--format", "json", "--format", "csv"]
    assert main(argv + ["--out", str(tmp_path / "a")]) == 0
    assert main(argv + ["--out", str(tmp_path / "b")]) == 0
    capsys.readouterr()
    files_a = sorted(p.name for p in (tmp_path / "a").iterdir())
    assert files_a == sorted(p.name for p in (tmp_path / "b").iterdir())
    for name in files_a:
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_digest_depends_on_config(capsys):
    _, out1, _ = run(["lang", "--preset", "fibonacci", "--horizon", "4", "--format", "csv"], capsys)
    _, out2, _ = run(["lang", "--preset", "fibonacci", "--horizon", "5", "--format", "csv"], capsys)
    d1, d2 = out1.splitlines()[0], out2.splitlines()[0]
    assert d1.startswith("# config-digest: ") and d1 != d2


def test_fg_json(tmp_path, capsys):
    assert main(["fg", "--preset", "fibonacci", "--n-range", "1..2", "--format", "json", "--out", str(tmp_path)]) == 0
    data = json.loads((tmp_path / "fg-fibonacci.json").read_text())
    assert "config_digest" in data
    ab = data["abelianization"]["2->1"]
    assert ab["matrix"] == [[1, 1], [1, 2]] and ab["abs_det"] == 1
    assert data["bases"]["1"]["generators"] == ["aab", "aba"]


def test_returns_csv(tmp_path, capsys):
    argv = ["returns", "--preset", "fibonacci", "--n-range", "1..2", "--format", "csv", "--out", str(tmp_path)]
    assert main(argv) == 0
    lines = (tmp_path / "returns-fibonacci.csv").read_text().splitlines()
    assert lines[2:] == [
        "n,window,size,min_length,max_length,is_code",
        "1,ba,2,2,3,True",
        "2,abaa,2,3,5,True",
    ]


def test_returns_word(capsys):
    code, out, _ = run(["returns", "--preset", "fibonacci", "--word", "aa", "--format", "json"], capsys)
    assert code == 0
    assert "aabab" in out


def test_tree_failure_is_a_result(capsys):
    code, out, _ = run(["tree", "--preset", "thue-morse", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["report"]["verdict"] == "fail" and data["report"]["witness"] == ""


def test_periodic_source(capsys):
    code, out, _ = run(["lang", "--periodic", "ab", "--horizon", "3", "--format", "csv"], capsys)
    assert code == 0
    assert out.splitlines()[-2:] == ["3,aba", "3,bab"]


def test_substitution_file(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"alphabet": ["a", "b"], "rules": {"a": "ab", "b": "a"}}))
    code, out, _ = run(["lang", "--sub", str(path), "--horizon", "3", "--format", "csv"], capsys)
    assert code == 0 and "3,bab" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["lang", "--sub", "does-not-exist.json"],
        ["lang", "--preset", "nope"],
        ["lang"],
        ["lang", "--preset", "fibonacci", "--periodic", "ab"],
        ["rauzy", "--preset", "fibonacci", "--n", "30", "--horizon", "20"],
        ["returns", "--preset", "fibonacci", "--n-range", "3..1"],
    ],
)
def test_configuration_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert err.startswith("rauzy: error:")


def test_non_primitive_exits_2(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"alphabet": ["a", "b"], "rules": {"a": "a", "b": "ab"}}))
    assert run(["lang", "--sub", str(path)], capsys)[0] == 2


def test_incomplete_exits_1(capsys):
    code, _, err = run(["returns", "--preset", "fibonacci", "--scan-budget", "200", "--n-range", "18..20"], capsys)
    assert code == 1
    assert "incomplete" in err


def test_verify_periodic(capsys):
    code, out, err = run(["verify", "periodic-ab"], capsys)
    assert code == 0
    assert json.loads(out)["passed"] is True
    assert err.count("[PASS]") == 4


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rauzy", "lang", "--preset", "fibonacci", "--horizon", "2", "--format", "csv"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.splitlines()[-3:] == ["2,aa", "2,ab", "2,ba"]
