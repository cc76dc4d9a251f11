import re
import json

import pytest

from alperin8 import cli
from alperin8.report import LOCATIONS, Check, Report, location


def _run(argv, capsys):
    code = cli.main(argv)
    return code, capsys.readouterr()


@pytest.mark.parametrize("argv", [["landrock"], ["norm8"], ["sylow", "--q", "3,5"], ["e8", "--q", "3"]])
def test_passing_commands_exit_zero(argv, capsys):
    code, out = _run(argv, capsys)
    assert code == 0, out.out
    assert "0 failed" in out.out


@pytest.mark.parametrize("argv", [["tables-e6", "--q", "2"], ["e8", "--q", "7"], ["sylow", "--q", "15"]])
def test_bad_q_is_a_usage_error(argv, capsys):
    code, out = _run(argv, capsys)
    assert code == 1
    assert "error" in out.err


def test_unknown_command_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 1


def test_bad_catalog_file_exits_one(tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    bad.write_text("{not json\n")
    code, _ = _run(["exceptional", "--q", "3", "--data", str(bad)], capsys)
    assert code == 1
    code, _ = _run(["exceptional", "--q", "3", "--data", str(tmp_path / "missing.jsonl")], capsys)
    assert code == 1


def test_failure_exits_two(monkeypatch, capsys):
    monkeypatch.setattr(cli, "execute", lambda steps, jobs: [Check("norm8/forced", False, {})])
    code, out = _run(["norm8"], capsys)
    assert code == 2 and "FAIL" in out.out


def test_json_output_schema(capsys):
    code, out = _run(["zsigmondy", "--q", "3", "--nmax", "8", "--json"], capsys)
    assert code == 0
    body = json.loads(out.out)
    assert body["schema"] == "1.0" and body["suite"] == "zsigmondy"
    t = body["totals"]
    assert t["checks"] == len(body["checks"]) == t["passed"] + t["failed"]
    for c in body["checks"]:
        assert set(c) == {"id", "location", "status", "details"}
        assert c["location"] == location(c["id"])


def test_reports_are_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        assert cli.main(["tables-e6", "--q", "3,5", "--report-dir", str(d)]) == 0
    capsys.readouterr()
    for name in ("tables-e6.json", "tables-e6.txt"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
    header = json.loads((a / "tables-e6.header.json").read_text())
    assert {"generated", "runtime_seconds"} <= set(header)


def test_parallel_jobs_match_serial(capsys):
    steps = [("landrock", {}), ("norm8", {}), ("sylow", {"qs": [3]})]
    serial = [c.to_dict() for c in cli.execute(steps, 1)]
    parallel = [c.to_dict() for c in cli.execute(steps, 2)]
    assert serial == parallel


def test_quick_plan_covers_every_location():
    args = cli.build_parser().parse_args(["all", "--quick"])
    steps = cli.plan(args)
    names = {n for n, _ in steps}
    assert names == set(LOCATIONS) - {"lzero"}
    assert [kw["case"] for n, kw in steps if n == "isometry"] == [3, 7, 21]


def test_locations_are_neutral():
    for text in LOCATIONS.values():
        assert not re.search(r"\b(prop|thm|eq|sec)\.|§|\[\d+\]", text.lower())


def test_text_report_alignment():
    rep = Report("x", [Check("norm8/a", True, {}), Check("norm8/longer", False, {})], 0.0)
    lines = rep.to_text().splitlines()
    assert lines[1].index("PASS") == lines[2].index("FAIL")
    assert lines[-1] == "totals: 1/2 passed, 1 failed"
