import json

import pytest

from kvlie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bch_degree_one(capsys):
    code, out, _ = run(capsys, "bch", "--degree", "1")
    assert code == 0
    assert out.strip() == "x + y"


def test_bch_degree_two_json(capsys):
    code, out, _ = run(capsys, "bch", "--degree", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == [
        {"word": "xy", "coeff": "1/2"},
        {"word": "yx", "coeff": "-1/2"},
    ]


def test_bch_both_methods_empty_diff(capsys):
    code, out, _ = run(capsys, "bch", "--degree", "3", "--method", "both")
    assert code == 0
    assert out.strip() == ""


def test_bch_latex(capsys):
    code, out, _ = run(capsys, "bch", "--degree", "2", "--format", "latex")
    assert code == 0
    assert out.strip() == "\\frac{1}{2}xy - \\frac{1}{2}yx"


def test_f0_series(capsys):
    code, out, _ = run(capsys, "f0", "--degree", "2")
    assert code == 0
    assert out.strip() == "1/4*y + 1/24*xy - 1/24*yx"


def test_emitted_text_reparses(capsys):
    from kvlie.algebra import XY, parse_poly
    from kvlie.kv import f0

    code, out, _ = run(capsys, "f0", "--degree", "5")
    assert code == 0
    assert parse_poly(XY, out.strip()) == f0(5).to_poly()


def test_verify_kv1(capsys):
    code, out, _ = run(capsys, "verify", "--equation", "kv1", "--degree", "6")
    assert code == 0
    assert "verified" in out


def test_verify_split(capsys):
    code, out, _ = run(capsys, "verify", "--equation", "split", "--degree", "5")
    assert code == 0


def test_verify_homogeneous(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--equation",
        "homogeneous",
        "--degree",
        "6",
        "--kernel-poly",
        "1/2*xy + 1/2*yx",
    )
    assert code == 0


def test_verify_homogeneous_requires_kernel_poly(capsys):
    code, _, err = run(capsys, "verify", "--equation", "homogeneous", "--degree", "4")
    assert code == 2
    assert "kernel-poly" in err


def test_verify_homogeneous_rejects_non_kernel(capsys):
    code, _, err = run(
        capsys,
        "verify",
        "--equation",
        "homogeneous",
        "--degree",
        "4",
        "--kernel-poly",
        "xy",
    )
    assert code == 2
    assert "kernel" in err


def test_verify_multilinear(capsys):
    code, out, _ = run(capsys, "verify", "--equation", "multilinear", "--degree", "4")
    assert code == 0


def test_verify_kv1_with_kernel_poly(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--equation",
        "kv1",
        "--degree",
        "5",
        "--kernel-poly",
        "xyxy",
    )
    assert code == 0


def test_parse_error_reports_position(capsys):
    code, _, err = run(capsys, "psi", "--var", "x", "--poly", "1/2*xz")
    assert code == 2
    assert "position 5" in err


def test_psi(capsys):
    code, out, _ = run(capsys, "psi", "--var", "x", "--poly", "xy")
    assert code == 0
    assert out.strip() == "1/2*y"


def test_solution_self_verifies(capsys):
    code, out, _ = run(
        capsys,
        "solution",
        "--kernel-poly",
        "1/2*xy + 1/2*yx",
        "--lambda1",
        "1/3",
        "--degree",
        "4",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("F = ")
    assert lines[1].startswith("G = ")
    assert "1/3*x" in lines[0]


def test_solution_json(capsys):
    code, out, _ = run(
        capsys, "solution", "--degree", "3", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["F"][0] == {"word": "y", "coeff": "1/4"}


def test_witt(capsys):
    code, out, _ = run(capsys, "witt", "--degree", "5")
    assert code == 0
    assert out.strip().splitlines()[4] == "degree 5: dimension 6, lyndon words 6"
    code, out, _ = run(capsys, "witt", "--degree", "3", "--format", "json")
    assert json.loads(out) == [
        {"degree": 1, "dimension": 2, "lyndon_words": 2},
        {"degree": 2, "dimension": 1, "lyndon_words": 1},
        {"degree": 3, "dimension": 2, "lyndon_words": 2},
    ]


def test_degree_guard(capsys):
    code, _, err = run(capsys, "f0", "--degree", "12")
    assert code == 2
    assert "--force" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "--equation", "bogus"])
    assert info.value.code == 2


def test_output_determinism(capsys, tmp_path):
    args = ["f0", "--degree", "4", "--format", "json"]
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, *args, "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text()) == json.loads(first[1])


def test_threads_env_hint(capsys, monkeypatch):
    monkeypatch.setenv("KVLIE_THREADS", "4")
    code, out, _ = run(capsys, "verify", "--equation", "kv1", "--degree", "5")
    assert code == 0
    monkeypatch.setenv("KVLIE_THREADS", "zzz")
    code, _, err = run(capsys, "verify", "--equation", "kv1", "--degree", "3")
    assert code == 2
    assert "KVLIE_THREADS" in err
