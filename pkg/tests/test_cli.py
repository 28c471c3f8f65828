"""Command-line front end: outputs, exit codes, reports, caching."""

import json
import pytest

from eocurves import catalan as cat
from eocurves import hurwitz as hur
from eocurves.cache import export_caches, import_caches
from eocurves.cli import main
from eocurves.report import RunConfig, run_suite


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_catalan_count_command(capsys):
    code, out = run_cli(capsys, "catalan", "count", "--g", "1", "--n", "1",
                        "--mu", "6")
    assert code == 0
    assert out.strip() == "10"


def test_hurwitz_number_command(capsys):
    code, out = run_cli(capsys, "hurwitz", "number", "--g", "0", "--n", "2",
                        "--mu", "1,1")
    assert code == 0
    assert out.strip() == "1/2"


def test_character_command(capsys):
    code, out = run_cli(capsys, "schur", "character", "--mu", "2,1",
                        "--lambda", "1,1,1")
    assert code == 0
    data = json.loads(out)
    assert data == {"dim": 2, "character": 2}


def test_s_coeff_cross_path_command(capsys):
    code, out = run_cli(capsys, "catalan", "s-coeff", "--m", "2")
    assert code == 0
    data = json.loads(out)
    assert data["equal"] is True


def test_wkb_corrections_command(capsys):
    code, out = run_cli(capsys, "--format", "json", "wkb", "corrections",
                        "--model", "hurwitz", "--order", "3")
    assert code == 0
    data = json.loads(out)
    assert data["overall"] == "pass"
    assert [c["check_id"] for c in data["checks"]] == ["A1", "A2", "A3"]


def test_verify_suite_exit_code(capsys):
    code, out = run_cli(capsys, "--format", "json", "verify", "--suite", "wkb")
    assert code == 0
    data = json.loads(out)
    assert data["overall"] == "pass"
    assert data["suite"] == "wkb"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["catalan", "count", "--g", "1"])  # missing required options
    assert err.value.code == 2


def _strip_times(report_dict):
    for c in report_dict["checks"]:
        c.pop("wall_time")
    return report_dict


def test_report_determinism_and_parallelism():
    cfg1 = RunConfig(suite="schur", jobs=1)
    cfg2 = RunConfig(suite="schur", jobs=4)
    r1 = _strip_times(run_suite("schur", cfg1).to_json_dict())
    r2 = _strip_times(run_suite("schur", cfg1).to_json_dict())
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)
    r3 = _strip_times(run_suite("schur", cfg2).to_json_dict())
    r3["config"]["jobs"] = 1
    assert json.dumps(r1, sort_keys=True) == json.dumps(r3, sort_keys=True)


def test_cache_roundtrip(tmp_path):
    cat.catalan_count(0, 1, [8])
    hur.hurwitz_number(1, 1, [3])
    snapshot_c = dict(cat._count_memo)
    snapshot_h = dict(hur._h_memo)
    path = tmp_path / "cache.json"
    export_caches(path)
    cat.clear_caches()
    hur.clear_caches()
    stats = import_caches(path)
    assert stats["rejected"] == 0
    assert cat._count_memo == snapshot_c
    assert hur._h_memo == snapshot_h


def test_cache_rejects_tampered_value(tmp_path):
    cat.catalan_count(0, 1, [2])
    path = tmp_path / "cache.json"
    export_caches(path)
    payload = json.loads(path.read_text())
    key = "0,1,2"
    assert key in payload["catalan"]
    payload["catalan"][key] = "1/3"
    path.write_text(json.dumps(payload))
    cat.clear_caches()
    warnings = []
    stats = import_caches(path, warn=warnings.append)
    assert stats["rejected"] == 1
    assert any("1/3" in w or key in w for w in warnings)
    # the poisoned key recomputes to the true value
    assert cat.catalan_count(0, 1, [2]) == 1


def test_cache_missing_file_cold_start(tmp_path):
    stats = import_caches(tmp_path / "absent.json")
    assert stats == {"catalan": 0, "hurwitz": 0, "rejected": 0}


def test_cli_cache_flag_roundtrip(tmp_path, capsys):
    path = tmp_path / "c.json"
    code, _ = run_cli(capsys, "--cache", str(path), "catalan", "count",
                      "--g", "0", "--n", "1", "--mu", "12")
    assert code == 0
    data = json.loads(path.read_text())
    assert "0,1,12" in data["catalan"]
    code, out = run_cli(capsys, "--cache", str(path), "catalan", "count",
                        "--g", "0", "--n", "1", "--mu", "12")
    assert code == 0 and out.strip() == "132"
