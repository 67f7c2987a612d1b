import json

import pytest

from qmono.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "k a")
    assert code == 0
    assert out.strip() == "b k"


def test_normalize_json_roundtrip(capsys):
    code, out, _ = run(capsys, "normalize", "a k b k a^-1", "--json")
    assert code == 0
    document = json.loads(out)
    code, out, _ = run(capsys, "normalize", document["word"], "--json")
    assert code == 0
    assert json.loads(out) == document


def test_multiply_and_invert(capsys):
    code, out, _ = run(capsys, "multiply", "a k", "a")
    assert code == 0
    assert out.strip() == "a b k"
    code, out, _ = run(capsys, "invert", "a k")
    assert code == 0
    assert out.strip() == "b^-1 k"


def test_rep(capsys):
    code, out, _ = run(capsys, "rep", "--n", "4", "a", "--json")
    assert code == 0
    document = json.loads(out)
    assert document["matrix"] == [[-1, 2], [0, 1]]
    assert document["det"] == -1
    code, out, _ = run(capsys, "rep", "--n", "5", "a")
    assert code == 0
    assert "[[1, 0], [0, 1]]" in out


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "--n", "4", "--radius", "3",
                       "--max-word-len", "6", "--json")
    assert code == 0
    document = json.loads(out)
    assert document["ok"] is True
    assert document["missing"] == []
    assert [1, 0] in document["reached"]


def test_orbit_odd_parity_is_domain_error(capsys):
    code, _, err = run(capsys, "orbit", "--n", "5")
    assert code == 1
    assert "OddParityClaim" in err


def test_homology(capsys):
    code, out, _ = run(capsys, "homology", "--n", "3", "--json")
    assert code == 0
    assert json.loads(out)["relative"] == {"3": 2}


def test_make_loop_then_classify(capsys, tmp_path):
    path = tmp_path / "kappa.json"
    code, _, _ = run(capsys, "make-loop", "--kind", "kappa", "--n", "4",
                     "--samples", "128", "-o", str(path))
    assert code == 0
    code, out, _ = run(capsys, "classify", str(path), "--json")
    assert code == 0
    document = json.loads(out)
    assert document["word"] == "k"
    assert document["matrix_even"] == [[0, 1], [1, 0]]
    code, _, err = run(capsys, "classify", "--n", "5", str(path))
    assert code == 1


def test_classify_missing_file(capsys):
    code, _, err = run(capsys, "classify", "/nonexistent/loop.json")
    assert code == 1


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") == 4
    assert "FAIL" not in out


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["rep", "a"])  # missing --n
    assert info.value.code == 2


def test_domain_error_exit_1(capsys):
    code, _, err = run(capsys, "normalize", "z")
    assert code == 1
    assert "MalformedWord" in err
