"""Black-box tests of the command-line contract."""
import json
import os
import subprocess
import sys

import pytest

from qsf.cli import RunManifest, main


def run(*args, cache_dir=None):
    env = dict(os.environ)
    if cache_dir is not None:
        env["QSF_CACHE_DIR"] = str(cache_dir)
    proc = subprocess.run(
        [sys.executable, "-m", "qsf", *args], capture_output=True, text=True, env=env, timeout=600
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_show_examples(tmp_path):
    assert run("show", "macdonald", "2,1", "--basis", "schur", cache_dir=tmp_path)[1] == (
        "s[3] + (q + t)*s[2,1] + (q*t)*s[1,1,1]\n"
    )
    assert run("show", "bstat", "2,1")[1] == "1 + q + t\n"
    assert run("show", "nabla", "1", cache_dir=tmp_path)[1] == "-s[1]\n"


def test_show_other_basis(capsys):
    assert main(["show", "macdonald", "2", "--basis", "monomial", "--max-deg", "2"]) == 0
    assert capsys.readouterr().out == "m[2] + (1 + q)*m[1,1]\n"


def test_show_rejects_oversized_partition(capsys):
    assert main(["show", "macdonald", "4,3", "--max-deg", "6"]) == 2
    assert "size 7" in capsys.readouterr().err


def test_show_toperator(capsys):
    assert main(["show", "toperator", "1,1", "--max-deg", "3", "--series-order", "2", "--setup", "1"]) == 0
    out = capsys.readouterr().out
    assert "word [S^-1]" in out and "u^1 v^1:" in out


def test_unknown_check_is_usage_error():
    code, _, err = run("verify", "nosuch")
    assert code == 2 and "nosuch" in err


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "conj6", "--max-deg", "11"],
        ["verify", "conj6", "--max-deg", "3", "--series-order", "4"],
        ["verify", "conj6", "--max-deg", "0"],
        ["verify", "five-term", "--pairs", "2,0:0,1"],
        ["show", "macdonald", "2,x"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(args):
    code, _, _ = run(*args)
    assert code == 2


def test_verify_pass_exit_0(tmp_path):
    code, out, _ = run("verify", "conj6", "--max-deg", "4", cache_dir=tmp_path)
    assert code == 0 and "overall: pass" in out


def test_verify_five_term_setup2_json(tmp_path):
    out_file = tmp_path / "report.json"
    code, _, _ = run(
        "verify", "five-term", "--pairs", "1,0:0,1", "--setup", "2", "--max-deg", "4", "--series-order", "3",
        "--format", "json", "--out", str(out_file), cache_dir=tmp_path,
    )
    assert code == 0
    data = json.loads(out_file.read_text())
    assert set(data) >= {"version", "config", "checks"}
    check = data["checks"][0]
    assert set(check) == {"name", "params", "window", "status", "mismatches", "millis"}
    assert check["status"] == "pass" and check["params"]["setup"] == 2


def test_manifest_round_trip(tmp_path, capsys):
    assert main(["verify", "macdonald", "--max-deg", "3", "--format", "json"]) == 0
    text = capsys.readouterr().out
    manifest = RunManifest.from_json(text)
    assert manifest.to_json() == text
    assert manifest.status == "pass"


def test_reports_are_deterministic_modulo_timing(capsys):
    def once():
        main(["verify", "all", "--max-deg", "3", "--series-order", "2", "--format", "json"])
        data = json.loads(capsys.readouterr().out)
        for c in data["checks"]:
            c["millis"] = 0
        return json.dumps(data, sort_keys=True)

    assert once() == once()


def test_parallel_jobs_match_serial(capsys):
    def report(jobs):
        main(["verify", "polynomiality", "--max-deg", "3", "--series-order", "3", "--format", "json", "--jobs", jobs])
        data = json.loads(capsys.readouterr().out)
        data["config"]["jobs"] = None
        for c in data["checks"]:
            c["millis"] = 0
        return data

    assert report("1") == report("2")


def test_failing_check_exits_1(monkeypatch, capsys):
    from qsf import cli, fiveterm

    real = fiveterm.verify_five_term

    def unsigned(m, n, m2, n2, setup, N, V):
        return real(m, n, m2, n2, setup, N, V, fiveterm.Variant(signed_nabla=False))

    monkeypatch.setattr(fiveterm, "verify_five_term", unsigned)
    code = cli.main(["verify", "five-term", "--pairs", "1,0:0,1", "--setup", "1", "--max-deg", "3", "--series-order", "2"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out and "mismatch u^" in out


def test_window_exhaustion_exits_3(monkeypatch, capsys):
    from qsf import cli, fiveterm
    from qsf.opcalc import WindowExhaustedError

    def boom(*a, **k):
        raise WindowExhaustedError("building T_{1,1}: step S^-1 from (0, 1): nothing exact")

    monkeypatch.setattr(fiveterm, "verify_generating_identity", boom)
    assert cli.main(["verify", "generating", "--max-deg", "3", "--series-order", "2"]) == 3
    assert "step S^-1" in capsys.readouterr().err


def test_cache_lifecycle(tmp_path):
    d = tmp_path / "tables"
    assert run("cache", "clear", "--cache-dir", str(d))[0] == 0
    assert run("cache", "build", "--cache-dir", str(d), "--max-deg", "4")[0] == 0
    assert sorted(p.name for p in d.iterdir()) == [f"htilde_d{k}.qsf" for k in range(5)]
    assert run("cache", "verify", "--cache-dir", str(d), "--max-deg", "4")[0] == 0
    path = d / "htilde_d3.qsf"
    lines = path.read_text().splitlines()
    assert lines[5] == "2,1 : 2,1 : q + t"
    lines[5] = "2,1 : 2,1 : q + 2*t"
    path.write_text("\n".join(lines) + "\n")
    code, _, err = run("cache", "verify", "--cache-dir", str(d), "--max-deg", "4")
    assert code == 3
    assert "htilde_d3.qsf:6" in err
    assert run("cache", "clear", "--cache-dir", str(d))[0] == 0
    assert not list(d.glob("*.qsf"))


def test_env_var_is_cache_fallback(tmp_path):
    assert run("cache", "build", "--max-deg", "2", cache_dir=tmp_path)[0] == 0
    assert (tmp_path / "htilde_d2.qsf").exists()


def test_corrupt_cache_file_on_read_exits_3(tmp_path):
    assert run("cache", "build", "--max-deg", "2", cache_dir=tmp_path)[0] == 0
    (tmp_path / "htilde_d2.qsf").write_text("garbage\n")
    code, _, err = run("show", "macdonald", "2", cache_dir=tmp_path)
    assert code == 3 and "htilde_d2.qsf" in err
