import json

import pytest

from pogcut.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_z6(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--z", "6", "--suite", "all", "--report", str(report))
    assert code == 0
    assert "FAIL" not in out
    data = json.loads(report.read_text())
    assert data["ok"] and data["data"]["maxcut_all_ones"] == 9


def test_verify_skips_points_beyond_guard(capsys):
    code, out, _ = run(capsys, "verify", "--z", "10", "--suite", "all")
    assert code == 0
    assert "SKIP  points" in out
    code, _, err = run(capsys, "verify", "--z", "10", "--suite", "points")
    assert code == 2 and "guard" in err


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "--z", "8")
    assert code == 0
    assert "s12=192" in out and "total=220" in out and "bound=308" in out


def test_bad_z(capsys):
    assert run(capsys, "stats", "--z", "7")[0] == 2
    assert run(capsys, "table", "--z", "4")[0] == 2


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build"])
    assert exc.value.code == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--z", "16", "--base17")
    assert code == 0
    assert out.splitlines()[1].split() == "21 14 61 18 A1 1C E1 1G 31 15 71 19 B1 1D F1".split()
    code, out, _ = run(capsys, "table", "--z", "6")
    assert out.splitlines()[1].split()[0] == "2,1"


def test_build_z16(capsys, tmp_path):
    path = tmp_path / "p12.lp"
    code, _, err = run(capsys, "build", "--z", "16", "--model", "p12", "--format", "lp", "--out", str(path))
    assert code == 0
    text = path.read_text()
    body = text.split("Subject To\n")[1].split("Bounds\n")[0]
    assert len(body.splitlines()) == 896
    assert "wrote" in err


@pytest.mark.parametrize("model", ["p12", "p2", "p0"])
@pytest.mark.parametrize("fmt", ["lp", "mps", "json"])
def test_build_formats(capsys, model, fmt):
    code, out, _ = run(capsys, "build", "--z", "6", "--model", model, "--format", fmt)
    assert code == 0 and out


def test_solve_methods_agree(capsys, tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n")
    outs = {}
    for method in ("enum", "oracle"):
        code, out, _ = run(capsys, "solve", "--graph", str(g), "--method", method)
        assert code == 0
        outs[method] = out
    assert outs["enum"] == outs["oracle"] == "z=6 pendant=True maxcut=4\n"
    code, out, _ = run(capsys, "solve", "--graph", str(g), "--method", "lp")
    assert code == 0 and "lp_bound=" in out


def test_solve_k6(capsys, tmp_path):
    g = tmp_path / "k6.txt"
    g.write_text("\n".join(f"{i} {j}" for i in range(1, 7) for j in range(i + 1, 7)))
    assert run(capsys, "solve", "--graph", str(g), "--method", "enum")[1] == "z=6 pendant=False maxcut=9\n"


def test_solve_errors(capsys, tmp_path):
    assert run(capsys, "solve", "--graph", str(tmp_path / "missing"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("e 1 1\n")
    code, _, err = run(capsys, "solve", "--graph", str(bad))
    assert code == 2 and "line 1" in err
    big = tmp_path / "big.txt"
    big.write_text("e 1 33\n")
    assert run(capsys, "solve", "--graph", str(big))[0] == 2


def test_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("POGCUT_SEED", "7")
    assert run(capsys, "verify", "--z", "6", "--suite", "points")[0] == 0
