import csv
import io
import json
import subprocess
import sys

import pytest

from islab import cli
from islab.graph_core import LabeledGraph, emit_graph6
from islab.partitions import OrderedPartition
from islab.templates import random_template


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_golden(capsys):
    code, out, _ = run(capsys, "count", "--k", "6", "--n", "7")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "k", "f_k", "t_k-1", "t_k-1_check", "estimate_1_ok"]
    assert [int(r[2]) for r in rows[1:]] == [1, 2, 8, 30, 131, 712, 4131]
    assert [int(r[3]) for r in rows[1:]] == [0, 1, 3, 6, 10, 14, 19]


def test_count_range_and_empty(capsys):
    code, out, _ = run(capsys, "count", "--k", "4", "--n", "3..5")
    assert code == 0
    assert [line.split(",")[0] for line in out.splitlines()[1:]] == ["3", "4", "5"]
    code, out, _ = run(capsys, "count", "--k", "4", "--n", "")
    assert code == 0
    assert out == "n,k,f_k,t_k-1,t_k-1_check,estimate_1_ok\n"


def test_count_to_file(tmp_path, capsys):
    target = tmp_path / "c.csv"
    assert run(capsys, "count", "--k", "5", "--n", "4", "--out", str(target))[0] == 0
    assert target.read_text().splitlines()[-1].startswith("4,5,31,")


def test_usage_errors(capsys):
    assert run(capsys, "count")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    code, _, err = run(capsys, "verify", "nosuchsuite")
    assert code == 2 and "nosuchsuite" in err
    assert run(capsys, "sample", "--k", "4")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_guard_names_guard(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "11", "--k", "4")
    assert code == 2
    assert "guard violated: enumerate_templates.partitions" in err


def test_enumerate_report(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--k", "4")
    assert code == 0
    rep = json.loads(out)
    assert all(s["formula"] == s["enumerated"] for s in rep["payload"]["per_shape"])
    assert rep["payload_sha256"]


def test_sample_passes(capsys):
    code, out, _ = run(capsys, "sample", "--n", "12", "--k", "4", "--count", "20", "--seed", "3")
    assert code == 0
    rep = json.loads(out)
    assert rep["payload"]["with_induced_cycle"] == 0
    assert len(rep["payload"]["items"]) == 20


def test_verify_single_suite(capsys):
    code, out, err = run(capsys, "verify", "coverperm")
    assert code == 0
    assert "coverperm: PASS" in err
    assert json.loads(out)["payload"]["coverperm"]["failures"] == []


def test_classify_json_lines(tmp_path, capsys):
    q = OrderedPartition.balanced(9, 4)
    graphs = [random_template(q, seed=s) for s in range(3)] + [LabeledGraph.complete(9)]
    src = tmp_path / "in.g6"
    src.write_text("".join(emit_graph6(g) + "\n" for g in graphs) + "\n")
    code, out, _ = run(capsys, "classify", str(src), "--k", "4", "--preset", "dichotomy")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 4
    assert all(line["f_class"] in ("T_Q", "F1", "F2", "F3") for line in lines)


def test_classify_bad_graph6(tmp_path, capsys):
    src = tmp_path / "bad.g6"
    src.write_text("~~~~\n")
    assert run(capsys, "classify", str(src), "--k", "4")[0] == 2


def test_classify_partition_file_short(tmp_path, capsys):
    g = LabeledGraph.complete(6)
    src = tmp_path / "in.g6"
    src.write_text(emit_graph6(g) + "\n" + emit_graph6(g) + "\n")
    pf = tmp_path / "q.jsonl"
    pf.write_text(OrderedPartition.balanced(6, 4).to_json() + "\n")
    code, _, err = run(capsys, "classify", str(src), "--k", "4", "--partition-file", str(pf))
    assert code == 2 and "fewer lines" in err


def test_classify_campaign(capsys):
    code, out, _ = run(capsys, "classify", "--count", "7", "--seed", "11")
    assert code == 0
    rep = json.loads(out)
    assert sum(rep["payload"]["tally"].values()) == 7


def test_jobs_env_default(monkeypatch):
    monkeypatch.setenv("ISLAB_JOBS", "3")
    args = cli.build_parser().parse_args(["count", "--k", "4"])
    assert args.jobs == 3
    monkeypatch.setenv("ISLAB_JOBS", "junk")
    assert cli.build_parser().parse_args(["count", "--k", "4"]).jobs == 1


@pytest.mark.slow
def test_console_module_entry():
    res = subprocess.run([sys.executable, "-m", "islab.cli", "count", "--k", "4", "--n", "4"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.splitlines()[-1].startswith("4,4,37,")
