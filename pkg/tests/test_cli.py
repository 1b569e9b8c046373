import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from avdom import cli, critical
from avdom.cli import EXIT_ERROR, EXIT_FINDING, EXIT_OK, RunConfig, run
from avdom.critical import CheckReport
from avdom.graph import complete, cycle, path

DATA = Path(__file__).resolve().parent.parent / "data"


def avdom(*args, stdin=None):
    return subprocess.run([sys.executable, "-m", "avdom", *args], input=stdin,
                          capture_output=True, text=True, timeout=600)


def run_inproc(**kw):
    out, err = io.StringIO(), io.StringIO()
    code = run(RunConfig(**kw), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def batch(tmp_path):
    f = tmp_path / "three.g6"
    f.write_text("\n".join(g.to_graph6() for g in (path(3), cycle(4), complete(4))) + "\n")
    return f


def test_avd_k4_exact():
    r = avdom("avd", "--graph6", "C~")
    assert r.returncode == EXIT_OK
    assert "avd = 32/15" in r.stdout
    rec = json.loads(avdom("avd", "--graph6", "C~", "--format", "json").stdout.splitlines()[0])
    assert rec["avd"] == {"num": "32", "den": "15"}


def test_verify_sum_exhaustive_exit_zero():
    r = avdom("verify", "--lemma", "sum", "--order-upto", "5", "--format", "json")
    assert r.returncode == EXIT_OK
    lines = [json.loads(x) for x in r.stdout.splitlines()]
    assert lines[-1]["summary"]["failed"] == 0
    assert len(lines) - 1 == 1 + 2 + 4 + 11 + 34


def test_verify_finding_exits_two(monkeypatch):
    def broken(g, which=critical.CHECKS):
        return [CheckReport("sum", g.to_graph6(), False, 1, 2, {})]
    monkeypatch.setattr(critical, "verify_all", broken)
    code, out, _ = run_inproc(command="verify", graph6="Bw", lemma="sum")
    assert code == EXIT_FINDING and "FAIL" in out


def test_search_n8_file():
    r = avdom("search", "--n", "8", "--min-degree", "2", "--input", str(DATA / "mindeg2_n8.g6"),
              "--format", "json")
    assert r.returncode == EXIT_OK
    rec = json.loads(r.stdout)
    assert rec["best_avd"] == {"num": "56", "den": "11"} and rec["argmax"] == ["G?r@`_"]
    assert rec["examined"] == 7459


def test_batch_three_records(batch):
    code, out, err = run_inproc(command="avd", input=str(batch), format="json")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == EXIT_OK and len(lines) == 4
    assert lines[-1] == {"summary": {"records": 3, "skipped": 0}}
    assert [x["avd"] for x in lines[:3]] == [{"num": "2", "den": "1"}, {"num": "28", "den": "11"},
                                             {"num": "32", "den": "15"}]


def test_batch_csv_column_order(batch):
    _, out, _ = run_inproc(command="tally", input=str(batch), format="csv")
    rows = out.splitlines()
    assert rows[0] == "graph6,n,d,gamma,Gamma,GammaPrime,avd"
    assert rows[1] == "Bg,3,0 1 3 1,1,5,10,2/1"
    assert rows[-1].startswith("#summary")


def test_empty_stream(tmp_path):
    f = tmp_path / "empty.g6"
    f.write_text("\n")
    code, out, err = run_inproc(command="avd", input=str(f), format="json")
    assert code == EXIT_OK
    assert [json.loads(x) for x in out.splitlines()] == [{"summary": {"records": 0, "skipped": 0}}]
    assert "warning" in err


def test_malformed_line_skipped_or_fatal(tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("Bg\nB\x7f!\nC~\n")
    code, out, err = run_inproc(command="avd", input=str(f), format="json")
    assert code == EXIT_OK and "line 2" in err
    assert json.loads(out.splitlines()[-1])["summary"] == {"records": 2, "skipped": 1}
    r = avdom("avd", "--input", str(f), "--strict")
    assert r.returncode == EXIT_ERROR and "line 2" in r.stderr


def test_distinct_diagnostics(tmp_path):
    r = avdom("avd", "--input", str(tmp_path / "missing.g6"))
    assert r.returncode == EXIT_ERROR and r.stderr.startswith("input error")
    r = avdom("avd", "--graph6", "C~x")
    assert r.returncode == EXIT_ERROR and r.stderr.startswith("parse error")
    r = avdom("tally", "--graph6", "C~", "--method", "bruteforce", "--oracle-cap", "3")
    assert r.returncode == EXIT_ERROR and r.stderr.startswith("cap exceeded")
    r = avdom("avd", "--format", "yaml", "--graph6", "C~")
    assert r.returncode == EXIT_ERROR
    r = avdom("search")
    assert r.returncode == EXIT_ERROR and "usage error" in r.stderr


def test_worker_count_does_not_change_bytes(batch):
    for args in (["verify", "--lemma", "all", "--order-upto", "5", "--format", "json"],
                 ["search", "--n", "7", "--no-isolated", "--format", "json"],
                 ["survey", "--n", "6", "--format", "csv"],
                 ["tally", "--input", str(batch), "--poly", "--format", "json"]):
        outs = {avdom(*args, "--workers", str(w)).stdout for w in (1, 4)}
        assert len(outs) == 1, args


def test_workers_from_environment(monkeypatch):
    monkeypatch.setenv("AVDOM_WORKERS", "2")
    cfg = cli.config_from_args(cli.build_parser().parse_args(["generate", "--n", "3"]))
    assert cfg.workers == 2


def test_edge_list_from_stdin():
    r = avdom("avd", "--edge-list", "-", "--format", "json", stdin="3 2\n0 1\n1 2\n")
    assert r.returncode == EXIT_OK
    assert json.loads(r.stdout.splitlines()[0])["avd"] == {"num": "2", "den": "1"}


def test_graph6_from_stdin():
    r = avdom("tally", "--input", "-", stdin="Bg\n")
    assert r.returncode == EXIT_OK and "d = [0, 1, 3, 1]" in r.stdout


def test_generate_counts():
    r = avdom("generate", "--n", "5")
    assert r.returncode == EXIT_OK and len(r.stdout.split()) == 34


def test_survey_csv():
    code, out, _ = run_inproc(command="survey", n=4, format="csv")
    rows = out.splitlines()
    assert code == EXIT_OK and rows[0].startswith("graph6") and rows[-1].startswith("#summary")


def test_profile_single_set():
    code, out, _ = run_inproc(command="profile", graph6="Bg", subset=[0, 1], format="json")
    rec = json.loads(out.splitlines()[0])
    assert code == EXIT_OK and rec["a"] == [1] and rec["N1"] == [2]


def test_verify_theorem_and_bound():
    code, out, _ = run_inproc(command="verify", lemma="theorem", order_upto=5, format="json")
    assert code == EXIT_OK and json.loads(out.splitlines()[-1])["summary"]["checks"] == 4
    code, _, _ = run_inproc(command="verify", lemma="bound", order_upto=5)
    assert code == EXIT_OK
