import json
import math
import os
import re
import subprocess
import sys
from pathlib import Path

import pytest

from ybrg.cli import CSV_HEADER, build_parser, build_report, main, trajectory_rows

GOLDEN = Path(__file__).parent / "golden"
GOLDEN_ARGS = ["verify", "all", "--u", "0.5", "--a", "-0.3183", "--c", "0.0", "--L", "1.0",
               "--n", "2", "--tol", "1e-9"]
TS_RE = re.compile(r'"timestamp": "[^"]*"')


def _mask(text):
    return TS_RE.sub('"timestamp": "*"', text)


@pytest.fixture(autouse=True)
def _no_seed_env(monkeypatch):
    monkeypatch.delenv("YBRG_SEED", raising=False)


def _report_text(argv, tmp_path, name="r.json"):
    out = tmp_path / name
    code = main(argv + ["--out", str(out)])
    return code, out.read_text()


def test_golden_report_and_determinism(tmp_path):
    code1, first = _report_text(GOLDEN_ARGS, tmp_path, "a.json")
    code2, second = _report_text(GOLDEN_ARGS, tmp_path, "b.json")
    assert code1 == code2 == 0
    assert _mask(first) == _mask(second)
    assert _mask(first) == _mask((GOLDEN / "verify_all.json").read_text())


def test_golden_trajectory(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["traj", "--csv", str(out)]) == 0
    again = tmp_path / "u.csv"
    main(["traj", "--csv", str(again)])
    assert out.read_bytes() == again.read_bytes() == (GOLDEN / "traj.csv").read_bytes()
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 102
    assert float(lines[1].split(",")[0]) == 1.0
    assert float(lines[-1].split(",")[0]) == 10.0


def test_report_schema(tmp_path):
    _, text = _report_text(["verify", "couplings"], tmp_path)
    d = json.loads(text)
    assert set(d) == {"version", "timestamp", "config", "checks", "verdict"}
    for chk in d["checks"]:
        assert set(chk) == {"name", "params", "value", "threshold", "pass"}
    assert d["config"]["a"] == -2 * 0.5 / math.pi
    assert d["config"]["rg_identification_holds"] is True


def test_single_suite_matches_all(tmp_path):
    _, single = _report_text(["verify", "ybe", "--seed", "7"], tmp_path, "s.json")
    _, every = _report_text(["verify", "all", "--seed", "7"], tmp_path, "a.json")
    names = {c["name"]: c for c in json.loads(every)["checks"]}
    for chk in json.loads(single)["checks"]:
        assert names[chk["name"]] == chk


def test_seed_env_overrides_flag(tmp_path, monkeypatch):
    _, plain = _report_text(["verify", "ybe", "--seed", "11"], tmp_path, "p.json")
    monkeypatch.setenv("YBRG_SEED", "11")
    _, env = _report_text(["verify", "ybe", "--seed", "99"], tmp_path, "e.json")
    assert json.loads(env)["config"]["seed"] == 11
    assert _mask(env).replace('"seed": 11', "") == _mask(plain).replace('"seed": 11', "")
    monkeypatch.setenv("YBRG_SEED", "abc")
    assert main(["verify", "ybe"]) == 2


def test_failing_suite_exits_one(tmp_path):
    code, text = _report_text(["verify", "transport", "--profile", "sine", "--eps", "0.1"],
                              tmp_path)
    assert code == 1
    d = json.loads(text)
    assert d["verdict"] == "fail"
    assert d["checks"][0]["value"] > 1e-3


def test_domain_error_exits_one(tmp_path, capsys):
    code, text = _report_text(["verify", "couplings", "--u", "2.0"], tmp_path)
    assert code == 1
    chk = {c["name"]: c for c in json.loads(text)["checks"]}["half_angle_constraint_at_u"]
    assert chk["value"] is None and "InvalidAnisotropy" in chk["params"]["error"]
    assert main(["traj", "--u", "2.0"]) == 1
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["verify", "nope"], ["verify"], ["traj", "--samples", "0"],
                                  ["verify", "ybe", "--n", "6"], []])
def test_usage_errors_exit_two(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_stdout_when_no_path(capsys):
    assert main(["traj", "--samples", "2", "--t0", "1", "--t1", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[1].startswith("1.0,")


def test_su2_trajectory():
    args = build_parser().parse_args(["traj", "--su2", "--samples", "3", "--t0", "1", "--t1", "4"])
    rows = trajectory_rows(args)
    assert rows[0][1] == math.pi and rows[-1][1] == pytest.approx(math.pi / 4, rel=1e-15)
    assert all(r[4] < 1e-15 and r[5] == 0.0 for r in rows)


def test_fixed_timestamp_gives_identical_json():
    args = build_parser().parse_args(["verify", "qkz1"])
    one = build_report(args, "T").to_json()
    args = build_parser().parse_args(["verify", "qkz1"])
    assert build_report(args, "T").to_json() == one


def test_module_entry_point(tmp_path):
    env = {k: v for k, v in os.environ.items() if k != "YBRG_SEED"}
    proc = subprocess.run([sys.executable, "-m", "ybrg", "traj", "--samples", "1"],
                          capture_output=True, text=True, env=env, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("t,j_par")
