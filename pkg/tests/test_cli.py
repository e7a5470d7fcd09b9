import json

import jsonschema
import pytest

from bridgekit import __version__
from bridgekit.cli import run
from bridgekit.types import WINDOW_ENV_VAR
from bridgekit.utils import load_schema


def run_json(capsys, *argv):
    assert run([*argv, "--format", "json"]) == 0
    return json.loads(capsys.readouterr().out)


def run_text(capsys, *argv):
    assert run(list(argv)) == 0
    return capsys.readouterr().out.strip()


@pytest.mark.parametrize(
    "link",
    [
        "L1((1/2,-2/5),(1/3,1/4))",
        "L2((-1/2,1/2),(1/3),(-1/2,1/2))",
        "L3((1/3,1/4,1/5),(1/2,-2/5))",
        "M(0;2/5,1/3,2/7)",
        "M(0;1/2,1/3,1/5)",
    ],
)
def test_census_json_matches_schema(capsys, link):
    data = run_json(capsys, "census", link)
    jsonschema.validate(data, load_schema("census"))
    assert data["command"] == "census"


def test_census_text(capsys):
    out = run_text(capsys, "census", "L1((1/2,-2/5),(1/2,-2/5))")
    assert "b-3" in out
    assert "{S1} {S2} {S3} {S4}" in out


def test_census_sweep_csv(capsys):
    lines = run_text(capsys, "census", "--sweep", "alpha_max=2").splitlines()
    assert lines[0] == "link,case,mu,exact"
    assert len(lines) == 5


def test_census_sweep_json(capsys):
    data = run_json(capsys, "census", "--sweep", "alpha_max=2")
    jsonschema.validate(data, load_schema("census"))
    assert data["sweep"] == {"alpha_max": 2}
    assert len(data["rows"]) == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "L1((1/2,-2/5),(1/3,1/4))"],
        ["classify", "L3((1/3,1/4,1/5),(1/2,-2/5))"],
        ["classify", "M(0;2/5,1/3,2/7)"],
        ["census", "--sweep", "alpha_max=2"],
        ["isotopic", "L1((1/2,-2/5),(1/3,1/4))", "1", "2"],
        ["word", "normalize", "c1^2 c2^3", "--group", "D(1/2,1/3)"],
        ["word", "multiply", "c1", "c2", "--group", "D(1/2,1/3)"],
        ["word", "conjugate", "c1 c2", "c2 c1", "--group", "D(1/2,1/3)"],
        ["word", "peripheral", "c1 c2 c1 c2 h^3", "--group", "D(1/2,1/3)"],
        ["word", "peripheral", "c2 c1 c2", "--group", "D(1/2,1/3)"],
        ["solve-w", "--group", "D(2/5,2/5)", "--window", "2,5"],
        ["solve-w", "--group", "D(1/2,1/3)", "--window", "2,5", "--check-oracle"],
        ["heegaard", "S2(-2;1/2,2/3,6/7)"],
        ["heegaard", "S2(0;2/5,2/7,4/5)"],
        ["symmetry", "M(0;1/2,1/2,1/2)"],
        ["symmetry", "M(0;1/2,1/3,1/5)"],
        ["merge-graph", "M(0;2/5,1/3,2/7)"],
    ],
)
def test_json_matches_command_schema(capsys, argv):
    data = run_json(capsys, *argv)
    assert data["command"] == argv[0]
    jsonschema.validate(data, load_schema(argv[0]))


@pytest.mark.parametrize(
    "argv",
    [
        ["census", "M(0;2/5,1/3,2/7)", "--format", "json"],
        ["census", "--sweep", "alpha_max=3"],
        ["solve-w", "--group", "D(-1/3,1/2)", "--window", "2,5", "--format", "json"],
        ["merge-graph", "M(0;2/5,1/3,2/7)"],
    ],
)
def test_same_input_same_output(capsys, argv):
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first


def test_classify(capsys):
    data = run_json(capsys, "classify", "L1((1/2,-2/5),(1/3,1/4))")
    assert data["command"] == "classify"
    assert data["family"] == "L1"
    assert data["link"] == "L1((1/2,-2/5),(1/3,1/4))"


def test_isotopic(capsys):
    assert run_text(capsys, "isotopic", "L1((1/2,-2/5),(1/3,1/4))", "1", "2") == "S1 ~ S2"
    assert run_text(capsys, "isotopic", "L1((1/2,-2/5),(1/3,1/4))", "1", "3") == "S1 !~ S3"


def test_word_ops(capsys):
    group = ("--group", "D(1/2,1/3)")
    assert run_text(capsys, "word", "normalize", "c1^2 c2^3", *group) == "h^-2"
    assert run_text(capsys, "word", "invert", "c2 h", *group) == "c2^2"
    assert run_text(capsys, "word", "peripheral", "c1 c2 c1 c2 h^3", *group) == "(c1 c2)^2 h^3"
    assert run_text(capsys, "word", "peripheral", "c2 c1 c2", *group) == "not peripheral"
    assert run_json(capsys, "word", "conjugate", "c1 c2", "c2 c1", *group)["result"] is True


def test_solve_w_oracle(capsys):
    out = run_text(capsys, "solve-w", "--group", "D(2/5,2/5)", "--window", "2,5", "--check-oracle")
    assert out == "predicted == brute-force: OK (11 solutions)"


def test_solve_w_window_from_env(capsys, monkeypatch):
    monkeypatch.setenv(WINDOW_ENV_VAR, "1,2")
    data = run_json(capsys, "solve-w", "--group", "D(2/5,2/5)")
    assert data["window"] == "1,2"
    assert len(data["solutions"]) == 5
    assert data["oracle"] is None


def test_heegaard(capsys):
    data = run_json(capsys, "heegaard", "S2(-2;1/2,2/3,6/7)")
    assert data["count"] == 2
    assert data["family"] == "E1(7)"


def test_symmetry(capsys):
    assert "Z2⊕D3" in run_text(capsys, "symmetry", "M(0;1/2,1/2,1/2)")


def test_merge_graph(capsys):
    data = run_json(capsys, "merge-graph", "M(0;2/5,1/3,2/7)")
    assert data["classes"] == [["P1", "P4"], ["P2", "P3"], ["P5"], ["P6"]]
    assert data["signs"] is None


@pytest.mark.parametrize(
    "argv",
    [
        ["census", "L1((1/2,-2/5),(1/2 -2/5))"],
        ["census"],
        ["frobnicate"],
        ["isotopic", "M(0;2/5,1/3,2/7)", "1", "2"],
        ["isotopic", "L1((1/2,-2/5),(1/3,1/4))", "1", "4"],
        ["word", "multiply", "c1", "--group", "D(1/2,1/3)"],
        ["solve-w", "--group", "D(1/2,1/3)", "--window", "three"],
        ["heegaard", "S2(0;1/2,1/3)"],
    ],
)
def test_errors_exit_one(capsys, argv):
    assert run(argv) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_coverage_exits_two(capsys):
    assert run(["merge-graph", "M(0;1/2,1/2,2/5)"]) == 2
    assert "elliptic" in capsys.readouterr().err


def test_version(capsys):
    assert run(["--version"]) == 0
    assert __version__ in capsys.readouterr().out
