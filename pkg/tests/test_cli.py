import json
import subprocess
import sys
from pathlib import Path

import pytest

from zsocle import cli
from zsocle.jennings import VerificationReport
from zsocle.report import build_context, canonical_json, read_report, table_report, write_report

ROOT = Path(__file__).resolve().parents[1]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_examples(capsys):
    code, out, _ = run(capsys, "info", "xs+:3")
    assert code == 0
    assert "order     27" in out and "p         3" in out and "powerful  no" in out
    assert "chain     27 > 3 > 1" in out and "Loewy length 9" in out
    code, out, _ = run(capsys, "info", "cyclic:8")
    assert "p         2" in out and "powerful  yes" in out and "Loewy length 8" in out
    _, out, _ = run(capsys, "info", "elab:2^3")
    assert "Loewy length 4" in out


def test_zs_table_examples(capsys):
    code, out, _ = run(capsys, "zs-table", "xs+:3", "--format", "json")
    body = json.loads(out)
    assert code == 0 and body["dim_center"] == 11
    assert [r["dim_zs"] for r in body["table"][1:]] == [1, 3, 6, 8, 9, 9, 10, 10, 11]
    assert [c["order"] for c in body["chain"]] == [27, 3, 1]
    assert body["chain"][0]["gens"] == ["a", "b"] and body["powerful"] is False
    _, out, _ = run(capsys, "zs-table", "xs-:3", "--format", "json")
    body = json.loads(out)
    assert body["loewy_length"] == 11 and [r["dim_zs"] for r in body["table"][1:4]] == [1, 3, 6]
    _, out, _ = run(capsys, "zs-table", "cyclic:3", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "n,dim_rad,dim_soc,dim_center,dim_zs"
    assert [line.split(",")[-1] for line in lines[2:]] == ["1", "2", "3"]
    _, out, _ = run(capsys, "zs-table", "cyclic:3")
    assert "dim Z 3" in out


def test_json_schema_and_invariants(capsys):
    _, out, _ = run(capsys, "zs-table", "dihedral:16", "--format", "json")
    body = json.loads(out)
    assert list(body) == ["spec", "order", "p", "powerful", "loewy_length", "chain", "table", "dim_center"]
    assert list(body["chain"][0]) == ["i", "order", "rank", "gens"]
    assert list(body["table"][0]) == ["n", "dim_rad", "dim_soc", "dim_zs"]
    table = body["table"]
    assert [r["n"] for r in table] == list(range(body["loewy_length"] + 1))
    assert table[0]["dim_zs"] == 0 and table[-1]["dim_zs"] == body["dim_center"]


def test_json_deterministic_and_round_trip(capsys, tmp_path):
    _, first, _ = run(capsys, "zs-table", "xs-:3", "--format", "json")
    _, second, _ = run(capsys, "zs-table", "xs-:3", "--format", "json")
    assert first == second
    _, timed, _ = run(capsys, "zs-table", "xs-:3", "--format", "json", "--timing")
    assert "timing" in json.loads(timed)
    assert canonical_json(json.loads(timed)) == first
    path = tmp_path / "r.json"
    report = table_report(build_context("xs-:3"))
    write_report(report, path)
    assert read_report(path) == report
    assert canonical_json(read_report(path)) == first


def test_no_weights_matches(capsys):
    _, fast, _ = run(capsys, "zs-table", "quaternion:16", "--format", "json")
    _, slow, _ = run(capsys, "zs-table", "quaternion:16", "--format", "json", "--no-weights")
    assert fast == slow


def test_cache(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "cache"
    _, first, _ = run(capsys, "zs-table", "xs+:3", "--format", "json", "--cache-dir", str(cache))
    files = list(cache.iterdir())
    assert len(files) == 1
    _, second, _ = run(capsys, "zs-table", "xs+:3", "--format", "json", "--cache-dir", str(cache))
    assert first == second
    monkeypatch.setenv("ZSOCLE_CACHE_DIR", str(tmp_path / "env"))
    run(capsys, "zs-table", "cyclic:9", "--format", "csv")
    assert len(list((tmp_path / "env").iterdir())) == 1


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "xs-:3", "--checks", "powerful")
    assert code == 0 and "powerful theorem: PASS" in out
    assert "soc^p inside Z" in out and "(a-1)^2*(b-1)^2*(b^3-1)" in out
    code, out, _ = run(capsys, "verify", "dihedral:16", "--checks", "scan")
    assert code == 0 and "FINDING" in out and "n=7" in out
    code, out, _ = run(capsys, "verify", "cyclic:9", "--checks", "jennings,rigidity,main")
    assert code == 0 and "FAIL" not in out


def test_verify_all_checks_json(capsys):
    code, out, _ = run(
        capsys, "verify", "xs+:3", "cyclic:4", "--checks", ",".join(cli.ALL_CHECKS), "--format", "json"
    )
    body = json.loads(out)
    assert code == 0 and [b["spec"] for b in body] == ["xs+:3", "cyclic:4"]
    names = [s["name"] for s in body[0]["suites"]]
    assert "morita (k=2)" in names and "okuyama" in names
    powerful = next(s for s in body[0]["suites"] if s["name"] == "powerful theorem")
    assert powerful["status"] == "SKIP"


def test_verify_jobs_preserves_order(capsys):
    code, out, _ = run(capsys, "verify", "cyclic:9", "xs+:3", "cyclic:4", "--checks", "okuyama", "--jobs", "2")
    heads = [line for line in out.splitlines() if line.startswith("==")]
    assert code == 0 and [h.split()[1] for h in heads] == ["cyclic:9", "xs+:3", "cyclic:4"]


def test_exit_codes(capsys, monkeypatch):
    assert run(capsys, "info", "nope:3")[0] == 2
    assert run(capsys, "info", "perm:n=6;gens=(1 2 3);(4 5)")[0] == 2
    assert run(capsys, "zs-table", "perm:n=3;gens=(1 2 3)", "--format", "csv")[0] == 0
    assert run(capsys, "info", "cyclic:8192")[0] == 3
    assert run(capsys, "verify", "cyclic:4", "--checks", "bogus")[0] == 2
    assert run(capsys, "verify", "cyclic:4", "prod:cyclic:64*cyclic:128")[0] == 3
    with pytest.raises(SystemExit) as info:
        cli.main(["zs-table"])
    assert info.value.code == 2

    def failing(ctx, checks, k=2):
        rep = VerificationReport("forced")
        rep.add("always", False, "witness")
        return [rep]

    monkeypatch.setattr(cli, "run_checks", failing)
    code, out, _ = run(capsys, "verify", "cyclic:4")
    assert code == 1 and "FAIL" in out and "witness" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zsocle", "zs-table", "cyclic:3", "--format", "csv"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.splitlines()[-1] == "3,0,3,3,3"


@pytest.mark.parametrize("script", sorted(p.name for p in (ROOT / "notebooks").glob("*.py")))
def test_notebook_scripts_run(script):
    proc = subprocess.run([sys.executable, str(ROOT / "notebooks" / script)], capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
