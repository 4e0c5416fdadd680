import json

import pytest

from artifact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_full_g4(capsys):
    code, out, _ = run(capsys, "verify", "--genus", "4", "--tier", "b", "--quiet")
    assert code == 0
    assert "falsified 0, undecided 0" in out


def test_verify_budget_zero(capsys):
    code, out, _ = run(capsys, "verify", "--genus", "4", "--statement", "L2.short", "--budget", "0")
    assert code == 2


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("ARTIFACT_BUDGET", "0")
    assert run(capsys, "verify", "--genus", "4", "--statement", "L2.short")[0] == 2
    assert run(capsys, "verify", "--genus", "4", "--statement", "L2.short", "--budget", "100")[0] == 0


def test_verify_printed_falsified(capsys):
    code, out, _ = run(capsys, "verify", "--genus", "4", "--statement", "LemY.conj.gt*",
                       "--include-printed")
    assert code == 1
    assert "(printed)" in out


@pytest.mark.parametrize("argv", [
    ["verify", "--genus", "3"],
    ["verify", "--genus", "4", "--jobs", "0"],
    ["verify", "--genus", "4", "--tier", "c"],
    ["verify", "--genus"],
    ["count", "--genus", "2"],
    ["homology", "--gen", "Q(1)", "--genus", "4"],
    ["bogus"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 3


def test_json_output(capsys, tmp_path):
    p = tmp_path / "c.json"
    code, _, _ = run(capsys, "verify", "--genus", "4", "--statement", "L3.*", "--json", str(p))
    assert code == 0
    d = json.loads(p.read_text(encoding="utf-8"))
    assert set(d) >= {"run_config", "certificates", "summary"}
    assert d["run_config"]["seed"] == 0 and d["run_config"]["genus"] == [4]
    c = d["certificates"][0]
    assert set(c) >= {"id", "genus", "kind", "as_printed", "verdict", "witness", "elapsed_ms"}


def test_json_byte_identical(capsys, tmp_path):
    outs = []
    for jobs in ("1", "3"):
        p = tmp_path / f"c{jobs}.json"
        run(capsys, "verify", "--genus", "5", "--statement", "L4.*", "--jobs", jobs, "--json", str(p))
        d = json.loads(p.read_text(encoding="utf-8"))
        for c in d["certificates"]:
            c["elapsed_ms"] = 0
        d["run_config"].pop("jobs", None)
        outs.append(json.dumps(d, sort_keys=True))
    assert outs[0] == outs[1]


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--genus", "5")
    assert code == 0 and out.strip() == "20 = 20"


def test_isometry(capsys):
    code, out, _ = run(capsys, "isometry", "--genus", "4")
    assert code == 0 and "order 48 (closure" in out and "order 48 (bruteforce)" in out


def test_homology_R(capsys):
    code, out, _ = run(capsys, "homology", "--gen", "R", "--genus", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[1:5] == ["   1  0  0  0", "   0  1  0  0", "   0  0  1  0", "   0  0  0  1"]
    assert "level 2: True" in out


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog", "--genus", "4")
    assert code == 0 and "L2.short" in out.split()


def test_default_genera_tier_a(capsys):
    code, out, _ = run(capsys, "verify", "--tier", "a", "--statement", "Count", "--quiet")
    assert code == 0 and out.strip() == "verified 9, falsified 0, undecided 0"
