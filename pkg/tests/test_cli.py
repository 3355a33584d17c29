import json

import pytest

from fabal.cli import main
from fabal.modcat import BasicModule, dual_lambda_module, lambda_module
from fabal.serialize import (
    ParseError, from_json, grid_lines, parse_grid, parse_module, to_grid, to_json,
)
from fabal.biject import fb_n
from fabal.count import fb_enumerate


def test_grid_format():
    assert to_grid(lambda_module(3)) == "■□□\n■□\n■"
    assert to_grid(dual_lambda_module(3), ascii=True) == "111\n00\n0"


def test_grid_separators():
    assert grid_lines("111/00|0") == ["111", "00", "0"]
    assert grid_lines("1 1 1\\n0 0\\n0") == ["111", "00", "0"]


@pytest.mark.parametrize("n", range(1, 6))
def test_round_trips(n):
    for m in (fb_n(n) if n == 5 else fb_enumerate(n)):
        assert parse_grid(to_grid(m)) == m
        assert parse_grid(to_grid(m, ascii=True)) == m
        assert from_json(json.dumps(to_json(m))) == m


def test_valleyed_json_round_trip():
    m = BasicModule.of(6, [(1, 3), (3, 4), (4, 6)], (3, 4))
    assert from_json(to_json(m)) == m
    assert parse_module(json.dumps(to_json(m))) == m


@pytest.mark.parametrize("bad", ["", "11\n1\n1", "1x\n1", '{"n": 2}', '{"n": 2, "summands": [[1]]}',
                                 '{"n": 2, "summands": [[2, 1]]}', "{oops"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_module(bad)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_check(capsys):
    code, out, _ = run(capsys, "check", "--grid", "100/10/1")
    assert code == 0 and "fb" in out and "minimal" in out


def test_cli_check_json(capsys):
    code, out, _ = run(capsys, "check", "--grid", "100/10/1", "--format", "json", "--oracle")
    assert code == 0
    data = json.loads(out)
    assert data["faithfully_balanced"] is True


def test_cli_count(capsys):
    assert run(capsys, "count", "--n", "3")[1].strip() == "21"
    assert run(capsys, "count", "--n", "6", "--valleys", "3,4")[1].strip() == "576"
    assert run(capsys, "count", "--n", "2", "--q", "2")[1].strip() == "16"
    code, out, _ = run(capsys, "count", "--n", "3", "--by-size", "--format", "json")
    assert json.loads(out) == {"3": 6, "4": 9, "5": 5, "6": 1}
    code, out, _ = run(capsys, "count", "--n", "3", "--by-size", "--brute", "--format", "json")
    assert json.loads(out) == {"3": 6, "4": 9, "5": 5, "6": 1}


def test_cli_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--size", "3", "--format", "json")
    assert code == 0 and len(out.strip().splitlines()) == 6


def test_cli_map(capsys):
    code, out, _ = run(capsys, "map", "--from", "grid", "--to", "perm", "--input", "100/10/1")
    assert json.loads(out) == [3, 2, 1]
    code, out, _ = run(capsys, "map", "--from", "sbf", "--to", "grid", "--input", "[1, 1, 1]")
    assert out.strip() == to_grid(dual_lambda_module(3))
    code, out, _ = run(capsys, "map", "--example")
    assert json.loads(out)["matches_fixture"] is True


def test_cli_map_tableau_needs_n(capsys):
    code, _, err = run(capsys, "map", "--from", "tableau", "--to", "grid",
                       "--input", '{"rows": [1], "pointed": [[0, 0]]}')
    assert code == 2 and "--n" in err


def test_cli_poset(capsys):
    code, out, _ = run(capsys, "poset", "--n", "3")
    data = json.loads(out)
    assert data["nodes"] == 6 and len(data["edges"]) == 6
    code, out, _ = run(capsys, "poset", "--n", "3", "--format", "dot")
    assert out.startswith("digraph")
    code, out, _ = run(capsys, "poset", "--meet", "100/10/1", "111/00/0")
    assert out.strip() == to_grid(lambda_module(3))


def test_cli_critical(capsys):
    code, out, _ = run(capsys, "critical", "--grid", "100/10/1", "--format", "ascii")
    assert code == 0 and out.strip() == "100\n10\n1"


def test_cli_errors(capsys):
    assert run(capsys, "check", "--grid", "1x/1")[0] == 2
    assert run(capsys, "count", "--n", "4", "--valleys", "x")[0] == 2
    assert run(capsys, "check", "@/nonexistent/file")[0] == 2


def test_cli_resource_limit(capsys, monkeypatch):
    monkeypatch.setenv("FABAL_MAX_SUBSETS", "8")
    code, _, err = run(capsys, "count", "--n", "4", "--brute")
    assert code == 3 and "resource limit" in err


def test_cli_repro_subset(capsys):
    code, out, _ = run(capsys, "repro", "--only", "11", "--no-timings")
    assert code == 0 and out.startswith("[PASS] criterion 11")
