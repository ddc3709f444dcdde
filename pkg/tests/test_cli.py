import json
import subprocess
import sys
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "skewsimple.cli", *args],
                          capture_output=True, text=True)


def test_check_green_instance_exits_zero():
    result = run_cli("check", str(FIXTURES / "swap2.json"))
    assert result.returncode == 0
    assert "violations: none" in result.stdout


def test_check_json_output_is_canonical(tmp_path):
    out = tmp_path / "report.json"
    result = run_cli("check", str(FIXTURES / "swap2.json"), "--format", "json",
                     "--out", str(out))
    assert result.returncode == 0
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["instance"]["name"] == "swap2"
    assert doc["violations"] == []
    again = run_cli("check", str(FIXTURES / "swap2.json"), "--format", "json")
    assert again.stdout == out.read_text(encoding="utf-8")


def test_check_selection_flag():
    result = run_cli("check", str(FIXTURES / "swap2.json"),
                     "--checks", "necessary_conditions,center_containment")
    assert result.returncode == 0
    assert "abelian_simplicity" not in result.stdout
    assert "necessary_conditions" in result.stdout


def test_check_rejects_bad_input_with_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "oops"', encoding="utf-8")
    result = run_cli("check", str(bad))
    assert result.returncode == 2
    assert "input error" in result.stderr

    missing = run_cli("check", str(tmp_path / "nope.json"))
    assert missing.returncode == 2


def test_check_rejects_unknown_check_name():
    result = run_cli("check", str(FIXTURES / "swap2.json"), "--checks", "bogus")
    assert result.returncode == 2


def test_report_round_trip(tmp_path):
    out = tmp_path / "report.json"
    run_cli("check", str(FIXTURES / "inner_conjugation_f2.json"), "--format", "json",
            "--out", str(out))
    rendered = run_cli("report", str(out))
    assert rendered.returncode == 0
    assert "center_is_field = no" in rendered.stdout


def test_report_flags_tampered_witness(tmp_path):
    out = tmp_path / "report.json"
    run_cli("check", str(FIXTURES / "trivial_group_ring.json"), "--format", "json",
            "--out", str(out))
    doc = json.loads(out.read_text(encoding="utf-8"))
    doc["checks"]["abelian_simplicity"]["verdicts"]["simple"]["witness"] = {
        "element": [["0", 1]]}
    out.write_text(json.dumps(doc), encoding="utf-8")
    result = run_cli("report", str(out))
    assert result.returncode == 1
    assert "witness check failed" in result.stderr
    assert run_cli("report", str(out), "--no-verify").returncode == 0


def test_suite_smoke_run():
    result = run_cli("suite", "--count", "3", "--seed", "5", "--skip-catalogue")
    assert result.returncode == 0
    assert "total violations: 0" in result.stdout
