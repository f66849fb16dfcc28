import json

import pytest

from qhowe.cli import main
from qhowe.report import SCHEMA, Report

BASE = ["--type", "D", "--epsilon", "1111", "--module", "W", "--ell", "1"]


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_relations_pass(capsys):
    code, out, err = run(["relations", *BASE, "--max-degree", "4"], capsys)
    assert code == 0
    rep = Report.from_json(out)
    assert rep.suite == "relations" and rep.ok
    assert json.loads(out)["schema"] == SCHEMA
    assert "relations:" in err


def test_commutant_flipped_sign_fails(capsys):
    argv = ["commutant", "--type", "C", "--epsilon", "1111", "--module", "W2", "--ell", "2",
            "--varsigma", "q", "--max-degree", "4"]
    code, out, err = run(argv, capsys)
    assert code == 1
    rep = Report.from_json(out)
    bad = rep.failures()
    assert bad and bad[0].witness["state"]
    assert "FAIL" in err


@pytest.mark.parametrize("argv", [
    ["relations", "--type", "D", "--epsilon", "0111", "--module", "W"],
    ["relations", "--type", "D", "--epsilon", "111", "--module", "W"],
    ["relations", "--type", "D", "--module", "W"],
    ["decompose", *BASE, "--family", "sp"],
    ["endo", *BASE],
    ["endo", *BASE, "--lambda", "2,2"],
    ["commutant", *BASE, "--max-degree", "1"],
    ["relations", *BASE, "--jobs", "0"],
])
def test_configuration_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert "error" in err


def test_config_file_and_flag_precedence(tmp_path, capsys):
    conf = tmp_path / "run.json"
    conf.write_text(json.dumps({"type": "C", "epsilon": "1111", "module": "W2", "ell": 1,
                                "maxDegree": 2}))
    code, out, _ = run(["decompose", "--config", str(conf)], capsys)
    assert code == 0
    assert Report.from_json(out).config["max_degree"] == 2
    code, out, _ = run(["decompose", "--config", str(conf), "--max-degree", "3"], capsys)
    assert Report.from_json(out).config["max_degree"] == 3
    conf.write_text(json.dumps({"bogus": 1}))
    assert run(["decompose", "--config", str(conf)], capsys)[0] == 2


def test_decompose_csv(tmp_path, capsys):
    path = tmp_path / "rows.csv"
    argv = ["decompose", "--type", "D", "--epsilon", "1111", "--module", "W", "--ell", "2",
            "--max-degree", "2", "--format", "csv", "--output", str(path)]
    code, out, _ = run(argv, capsys)
    assert code == 0 and out == ""
    assert path.read_text().splitlines() == [
        "lambda,weight,multiplicity,classical_dim,match",
        "(),0 0 0 0,1,1,true",
        "(1),1 0 0 0,2,2,true",
        "(2),1 1 0 0,2,2,true",
        '"(1,1)",2 0 0 0,1,1,true',
    ]


def test_report_round_trip(capsys):
    code, out, _ = run(["scan", *BASE, "--max-degree", "2"], capsys)
    assert code == 0
    rep = Report.from_json(out)
    assert Report.from_json(rep.to_json()).body() == rep.body()


def test_classical_limit_comparison_recorded(capsys):
    code, out, _ = run(["classical-limit", *BASE], capsys)
    assert code == 0
    rep = Report.from_json(out)
    assert rep.items[-1].name == "comparison[psi flipped]"
    assert rep.items[-1].status == "skip"


def test_endo_command(capsys):
    argv = ["endo", "--type", "D", "--epsilon", "1100", "--module", "W", "--ell", "3",
            "--lambda", "1"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    values = Report.from_json(out).items[-1].values
    assert values == {"endo_dim": 1, "expected": 1}


@pytest.mark.parametrize("cmd,extra", [
    ("relations", ["--max-degree", "4"]),
    ("polarization", ["--max-degree", "3"]),
    ("commutant", ["--max-degree", "3", "--ell", "2", "--epsilon", "1100"]),
])
def test_jobs_do_not_change_body(cmd, extra, capsys):
    bodies = []
    for jobs in ("1", "3"):
        code, out, _ = run([cmd, *BASE, *extra, "--jobs", jobs], capsys)
        assert code == 0
        bodies.append(Report.from_json(out).body_json())
    assert bodies[0] == bodies[1]
