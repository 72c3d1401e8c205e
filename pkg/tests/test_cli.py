import json

import pytest

import main
from src.algebra.burau import BurauMatrix, burau_image
from src.algebra.laurent import CoeffRing
from src.braids.braid import parse_braid, parse_word_lines


def run(capsys, *argv):
    status = main.main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_eval_round_trips(capsys):
    status, out, _ = run(capsys, "eval", "--n", "4", "--mod", "2", "--word", "1 -2 3")
    assert status == 0
    ring = CoeffRing(2)
    assert BurauMatrix.parse_grid(out, ring) == burau_image(parse_braid("1 -2 3", 4), ring)


def test_eval_structured(capsys):
    status, out, _ = run(capsys, "eval", "--n", "3", "--mod", "0", "--word", "1 2", "--format", "structured")
    assert status == 0
    data = json.loads(out)
    assert data["n"] == 3 and data["modulus"] == 0
    assert BurauMatrix.from_dict(data) == burau_image(parse_braid("1 2", 3), CoeffRing(0))


def test_kernel_check(capsys):
    status, out, _ = run(capsys, "kernel-check", "--mod", "2", "--example", "alpha_1")
    assert status == 0
    assert out == "identity: yes\n"
    status, out, _ = run(capsys, "kernel-check", "--mod", "3", "--example", "alpha_1")
    assert status == 1
    assert out == "identity: no\n"


def test_kernel_check_word_file(capsys, tmp_path):
    path = tmp_path / "words.txt"
    path.write_text("4: 1 -1\n3: 1 2 1 -2 -1 -2\n")
    status, out, _ = run(capsys, "kernel-check", "--mod", "5", "--word-file", str(path))
    assert status == 0
    assert out.count("identity: yes") == 2


def test_brunnian(capsys):
    status, out, _ = run(capsys, "brunnian", "--example", "alpha_1", "--forget", "2,4")
    assert status == 0
    assert "forget 2,4:" in out
    assert out.rstrip().endswith("brunnian: no")


def test_certify_and_check(capsys, tmp_path):
    status, out, _ = run(capsys, "certify", "reducible-b", "--mod", "2", "--k", "0", "--b2-word", "y x")
    assert status == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "verdict: NONTRIVIAL_IMAGE"
    assert lines[-2].endswith("∈ V_X")
    path = tmp_path / "cert.txt"
    path.write_text(out, encoding="utf-8")
    status, out, _ = run(capsys, "certify", "--check", str(path))
    assert status == 0
    assert out == "valid: b4b-mixed NONTRIVIAL_IMAGE\n"


def test_certify_tampered_file(capsys, tmp_path):
    _, out, _ = run(capsys, "certify", "periodic", "--n", "4", "--variant", "delta", "--k", "1", "--mod", "2")
    path = tmp_path / "cert.txt"
    path.write_text(out.replace("= 3\n", "= 4\n"), encoding="utf-8")
    status, _, err = run(capsys, "certify", "--check", str(path))
    assert status == 3
    assert "case: periodic" in err


@pytest.mark.parametrize("argv", [
    ["certify", "b3", "--mod", "2", "--m", "-1", "--k", "2", "--l", "1"],
    ["certify", "b3", "--mod", "3", "--pa-word", "2 -1"],
    ["certify", "b3", "--mod", "2", "--variant", "gamma", "--k", "2"],
    ["certify", "reducible-a", "--mod", "2", "--k", "1", "--l", "-1"],
])
def test_certify_cases(capsys, argv):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    assert out.strip().splitlines()[-1].startswith("verdict: ")


def test_b2_normalize(capsys):
    status, out, _ = run(capsys, "b2-normalize", "--b2-word", "y x x y x", "--segment")
    assert status == 0
    assert out.splitlines()[0] == "D^0 yxxyx"
    assert "move: yx: Y->X" in out
    assert "collected: 1" in out
    status, out, _ = run(capsys, "b2-normalize", "--b2-word", "X", "--format", "structured")
    assert json.loads(out) == {"delta_exp": -1, "positive": "yxy"}


def test_fuzz_is_reproducible(capsys):
    argv = ["pingpong-fuzz", "--mod", "3", "--seed", "7", "--trials", "250", "--suite", "all"]
    status, first, _ = run(capsys, *argv)
    assert status == 0
    status, second, _ = run(capsys, *argv, "--workers", "1")
    assert first == second
    status, out, _ = run(capsys, "b3-faithful-fuzz", "--mod", "2", "--seed", "7", "--trials", "250")
    assert status == 0
    assert "violations: 0" in out


def test_search(capsys):
    status, out, _ = run(capsys, "search", "--mod", "2", "--max-length", "4")
    assert status == 0
    assert out == ""
    status, out, _ = run(capsys, "search", "--mod", "2", "--max-length", "24",
                         "--pattern", "-1 2 1 3 -2 -3")
    assert status == 0
    assert "24\t-1 2 1 3 -2 -3" in out and out.rstrip().endswith("verified")


def test_examples(capsys):
    status, out, _ = run(capsys, "examples")
    assert status == 0
    words = parse_word_lines(out.splitlines())
    assert len(words) == 6


@pytest.mark.parametrize("argv", [
    ["eval", "--word", "1 2"],
    ["eval", "--mod", "1", "--word", "1"],
    ["eval", "--mod", "2", "--word", "1 x"],
    ["eval", "--mod", "2", "--n", "3", "--word", "3"],
    ["pingpong-fuzz", "--mod", "2"],
    ["kernel-check", "--mod", "2", "--example", "beta"],
    ["search", "--mod", "2", "--max-length", "40"],
    ["certify"],
    [],
])
def test_usage_errors(capsys, argv):
    status, out, _ = run(capsys, *argv)
    assert status == 2
    assert out == ""


def test_missing_word_file(capsys, tmp_path):
    status, _, err = run(capsys, "eval", "--mod", "2", "--word-file", str(tmp_path / "none.txt"))
    assert status == 2
    assert "error:" in err
