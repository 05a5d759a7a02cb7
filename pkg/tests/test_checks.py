"""Check catalog, report emission, determinism, CLI contract."""

import json
import subprocess
import sys

import pytest

from gossez_lab.checks import (
    CATALOG,
    CHECK_NAMES,
    CheckConfig,
    UnknownCheckError,
    emit,
    run_checks,
    select_checks,
)
from gossez_lab.cli import main
from gossez_lab.verdict import VERIFIED, WITNESS_FOUND

FAST = CheckConfig(trials=20)

# One catalog entry per verifiable claim; names and expected outcomes are
# frozen here so a drive-by edit of the catalog fails loudly.
MANIFEST = {
    "g-basic": VERIFIED,
    "g-orth": VERIFIED,
    "gstar": VERIFIED,
    "range": VERIFIED,
    "fds": VERIFIED,
    "sds-i": WITNESS_FOUND,
    "sds-ii": VERIFIED,
    "dichotomy": VERIFIED,
}


def test_catalog_matches_manifest():
    assert dict((s.name, s.expected_status) for s in CATALOG) == MANIFEST
    assert len(set(CHECK_NAMES)) == len(CHECK_NAMES)
    for spec in CATALOG:
        assert spec.claim and spec.title


def test_select_checks():
    assert select_checks(("all",)) == CATALOG
    chosen = select_checks(("fds", "g-basic"))
    assert [s.name for s in chosen] == ["g-basic", "fds"]  # catalog order
    with pytest.raises(UnknownCheckError):
        select_checks(("bogus",))


@pytest.fixture(scope="module")
def fast_report():
    return run_checks(FAST)


def test_full_fast_suite_passes(fast_report):
    assert fast_report.all_passed
    assert fast_report.first_failure is None
    assert [r.name for r in fast_report.results] == list(MANIFEST)


def test_json_emission_is_canonical_and_round_trips(fast_report):
    payload = emit(fast_report, "json")
    doc = json.loads(payload)
    assert doc["all_passed"] is True
    assert doc["version"] == "0.1.0"
    assert doc["config"]["trials"] == 20
    assert [c["name"] for c in doc["checks"]] == list(MANIFEST)
    # no timing anywhere: the report must be reproducible byte for byte
    assert b"wallclock" not in payload
    assert payload == json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True).encode() + b"\n"


def test_reports_are_byte_identical_across_runs(fast_report):
    again = run_checks(FAST)
    for fmt in ("json", "csv", "md"):
        assert emit(fast_report, fmt) == emit(again, fmt)


def test_seed_changes_report(fast_report):
    other = run_checks(CheckConfig(trials=20, seed=1))
    assert emit(other, "json") != emit(fast_report, "json")
    assert other.all_passed


def test_csv_and_md_emission(fast_report):
    csv_payload = emit(fast_report, "csv").decode()
    lines = csv_payload.strip().split("\n")
    assert lines[0].startswith("name,")
    assert len(lines) == 1 + len(MANIFEST)
    md_payload = emit(fast_report, "md").decode()
    assert "# gossez-lab report" in md_payload
    assert "all checks passed" in md_payload
    with pytest.raises(ValueError):
        emit(fast_report, "yaml")


def test_single_check_run():
    report = run_checks(CheckConfig(checks=("range",), trials=10))
    assert [r.name for r in report.results] == ["range"]
    assert report.all_passed


def test_empty_selection_gives_header_only_report():
    report = run_checks(CheckConfig(checks=()))
    assert report.results == ()
    assert report.all_passed  # vacuously
    csv_lines = emit(report, "csv").decode().strip().split("\n")
    assert len(csv_lines) == 1 and csv_lines[0].startswith("name,")
    assert json.loads(emit(report, "json"))["checks"] == []


# ------------------------------------------------------------------ CLI


def test_cli_list_exits_zero(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for name in MANIFEST:
        assert name in out


def test_cli_unknown_check_is_usage_error(capsys):
    assert main(["run", "--checks", "bogus"]) == 2
    assert "usage error" in capsys.readouterr().err


def test_cli_bad_seed_env_is_usage_error(monkeypatch, capsys):
    monkeypatch.setenv("GOSSEZ_LAB_SEED", "not-a-number")
    assert main(["run", "--checks", "range", "--trials", "4"]) == 2


def test_cli_env_seed_overrides_flag(monkeypatch, tmp_path):
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    monkeypatch.setenv("GOSSEZ_LAB_SEED", "9")
    assert main(["run", "--checks", "range", "--trials", "10", "--seed", "0",
                 "--out", str(out_a)]) == 0
    monkeypatch.delenv("GOSSEZ_LAB_SEED")
    assert main(["run", "--checks", "range", "--trials", "10", "--seed", "9",
                 "--out", str(out_b)]) == 0
    doc_a = json.loads(out_a.read_text())
    doc_b = json.loads(out_b.read_text())
    doc_a["config"].pop("out_path")
    doc_b["config"].pop("out_path")
    assert doc_a == doc_b
    assert doc_a["config"]["seed"] == 9


def test_cli_writes_report_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(
        ["run", "--checks", "g-basic", "--trials", "5", "--format", "json", "--out", str(out)]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["checks"][0]["name"] == "g-basic"
    err = capsys.readouterr().err
    assert "g-basic" in err  # console summary goes to stderr


def test_cli_stdout_when_no_out(capsys):
    code = main(["run", "--checks", "range", "--trials", "5", "--format", "md"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("# gossez-lab report")


def test_cli_io_failure(tmp_path, capsys):
    target = tmp_path / "missing-dir" / "report.json"
    code = main(["run", "--checks", "range", "--trials", "5", "--out", str(target)])
    assert code == 3
    assert "i/o error" in capsys.readouterr().err


def test_cli_usage_error_on_bad_flag():
    with pytest.raises(SystemExit) as err:
        main(["run", "--format", "yaml"])
    assert err.value.code == 2


def test_cli_reports_check_failure_with_exit_one(monkeypatch, capsys, fast_report):
    import dataclasses

    import gossez_lab.cli as cli

    broken = dataclasses.replace(fast_report.results[0], status="refuted", passed=False)
    doc = dataclasses.replace(fast_report, results=(broken,) + fast_report.results[1:])
    monkeypatch.setattr(cli, "run_checks", lambda config: doc)
    assert cli.main(["run", "--checks", "all"]) == 1
    assert "first failing check: g-basic" in capsys.readouterr().err


def test_console_script_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "gossez_lab.cli", "list"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "dichotomy" in result.stdout
