import json

import pytest

from sympow import fixtures
from sympow.cli import main
from sympow.cli.repro import get_available_cases, get_case, resolve_case_id, run_case
from sympow.cli.report import TaskResult, to_json
from sympow.cli.scenario import Scenario, Task, parse_edges, run_scenario
from sympow.cli import tasks as cli_tasks
from sympow.cli.tasks import build_strategy
from sympow.exceptions import GuardAbort, ParseError, ScenarioError
from sympow.symbolic import Justification, StrategyKind


# ===== scenario files =====

def test_parse_scenario():
    scenario = Scenario.parse(
        "# rigidity of the tetrahedron ideal\n"
        "task: scan\n"
        "ideal: tetrahedron   # named fixture\n"
        "n_max: 3\n"
        "json: out/report.json\n"
        "assert: rees-s2, quotients-m-primary\n"
    )
    assert scenario.task == Task.SCAN
    assert scenario.n_max == 3
    assert scenario.json_path == "out/report.json"
    assert scenario.asserted == ["rees-s2", "quotients-m-primary"]
    assert scenario.ideal_input() == fixtures.tetrahedron()


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("task: scan\nfoo: 1\n", 2, 1),
        ("task: scan\ntask: compare\n", 2, 1),
        ("task: dance\n", 1, 7),
        ("task: scan\nideal: tetrahedron\nn_max: 1\n", 3, 8),
        ("task scan\n", 1, 1),
    ],
)
def test_scenario_errors_are_located(text, line, column):
    with pytest.raises(ScenarioError) as info:
        Scenario.parse(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_scenario_missing_keys():
    with pytest.raises(ScenarioError, match="needs 'n'"):
        Scenario.parse("task: compare\nideal: tetrahedron\n")
    with pytest.raises(ScenarioError, match="missing key 'task'"):
        Scenario.parse("ideal: tetrahedron\n")


def test_polynomial_error_position():
    scenario = Scenario.parse("task: profile\nring: QQ[x,y]\nideal: x, q\n")
    with pytest.raises(ParseError, match="unknown variable") as info:
        scenario.ideal_input()
    assert (info.value.line, info.value.column) == (3, 11)


def test_fixture_ring_must_match():
    scenario = Scenario.parse("task: profile\nring: QQ[a,b]\nideal: tetrahedron\n")
    with pytest.raises(ScenarioError) as info:
        scenario.ideal_input()
    assert info.value.line == 2


def test_forms_stand_in_for_map():
    scenario = Scenario.parse(
        "task: cremona-verify\nring: QQ[x,y,z]\nforms: yz, xz, xy\ninverse: yz, xz, xy\n"
    )
    F, G = scenario.map_input()
    assert F.forms == fixtures.quadratic_involution()[0].forms


def test_parse_edges():
    assert parse_edges("1-2, 2-3") == [(1, 2), (2, 3)]
    assert parse_edges("1-2 3-4") == [(1, 2), (3, 4)]
    with pytest.raises(ScenarioError):
        parse_edges("1-")


def test_run_scenario(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_text("task: classify\nedges: 1-2, 2-3, 3-4\n", encoding="utf-8")
    result = run_scenario(str(path))
    assert result.payload["classes"][0]["kind"] == "path4"


# ===== strategies =====

def test_auto_strategy(three_edges, hankel):
    assert build_strategy(three_edges).kind == StrategyKind.PRIME_INTERSECTION
    strategy = build_strategy(hankel, "auto")
    assert strategy.kind == StrategyKind.SATURATION
    assert strategy.justification == Justification.DIM1_SATURATED
    element = build_strategy(three_edges, "user-element-saturation", element="x + y + z")
    assert element.kind == StrategyKind.ELEMENT


# ===== reports =====

def test_json_envelope():
    text = to_json([TaskResult(task="profile", payload={"b": 1, "a": [1, 2]})])
    data = json.loads(text)
    assert data["schema_version"] == 1
    assert data["results"] == [{"task": "profile", "aborted": False, "result": {"a": [1, 2], "b": 1}}]
    assert text.index('"results"') < text.index('"schema_version"')


# ===== command line =====

def test_profile_command(capsys):
    code = main(["profile", "QQ[x0,x1,x2,x3]", "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "height" in out
    assert "yes-by-criterion-i" in out


def test_input_errors_exit_one(capsys, tmp_path):
    assert main(["profile", "QQ[x,y]", "x + q"]) == 1
    assert main(["profile"]) == 1
    assert main(["repro", "nope"]) == 1
    assert main(["profile", "--fixture", "hankel", "--config", str(tmp_path / "missing.yaml")]) == 1
    assert "error:" in capsys.readouterr().err


def test_compare_json_is_deterministic(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["compare", "--fixture", "three-edges", "-n", "2", "--json", str(first)]) == 0
    assert main(["compare", "--fixture", "three-edges", "-n", "2", "--json", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    data = json.loads(first.read_text(encoding="utf-8"))
    report = data["results"][0]["result"]["report"]
    assert report["equal"] is False
    assert report["witness"] == "x*y*z"


def test_guard_abort_exits_two(tmp_path):
    assert main(["compare", "--fixture", "three-edges", "-n", "2", "--guard-degree", "3"]) == 2
    path = tmp_path / "scan.json"
    code = main(["scan", "--fixture", "three-edges", "--n-max", "3", "--guard-degree", "3", "--json", str(path)])
    assert code == 2
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["results"][0]["aborted"] is True


def test_compare_abort_keeps_partial_report(tmp_path):
    path = tmp_path / "compare.json"
    code = main(["compare", "--fixture", "three-edges", "-n", "2", "--guard-degree", "3", "--json", str(path)])
    assert code == 2
    result = json.loads(path.read_text(encoding="utf-8"))["results"][0]
    assert result["task"] == "compare"
    assert result["aborted"] is True
    report = result["result"]["report"]
    assert (report["n"], report["equal"]) == (2, None)
    assert "degree" in report["error"]


def test_profile_keeps_earlier_stages_on_abort(monkeypatch, hankel):
    def abort(I):
        raise GuardAbort("degree", 3, 4, "resolve")

    monkeypatch.setattr(cli_tasks, "predicates", abort)
    result = cli_tasks.profile_task(hankel)
    assert result.aborted
    assert result.payload["profile"]["height"] == 2
    assert "degree guard exceeded" in result.payload["predicates"]["error"]


def test_guarded_scenario_writes_partial_report(tmp_path):
    report = tmp_path / "out" / "pentagon.json"
    scenario = tmp_path / "pentagon.txt"
    scenario.write_text(
        f"task: resolve\nideal: pentagon\npowers: 3\nguard_degree: 5\njson: {report}\n",
        encoding="utf-8",
    )
    assert main(["run", str(scenario)]) == 2
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["results"][0]["aborted"] is True
    assert "error" in data["results"][0]["result"]["resolutions"][0]


def test_malformed_scenario_exits_one(tmp_path):
    scenario = tmp_path / "bad.txt"
    scenario.write_text("task: scan\nfoo: 1\n", encoding="utf-8")
    assert main(["run", str(scenario)]) == 1
    assert main(["run", str(tmp_path / "missing.txt")]) == 1


def test_classify_command(capsys):
    assert main(["classify", "--all"]) == 0
    out = capsys.readouterr().out
    for name in ("paw", "diamond", "cycle4", "K4"):
        assert name in out
    assert main(["classify", "--edges", "1-2 2-3 3-4"]) == 0
    assert "path4" in capsys.readouterr().out


def test_cremona_verify_command(capsys):
    assert main(["cremona", "verify", "--fixture", "polar-map"]) == 0
    assert "2*x^3" in capsys.readouterr().out


def test_cremona_verify_explicit_forms(capsys):
    code = main(["cremona", "verify", "QQ[x,y,z]", "--forms", "yz", "xz", "xy", "--inverse", "yz, xz, xy"])
    assert code == 0
    assert "x*y*z" in capsys.readouterr().out


def test_version():
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0


# ===== reproduction cases =====

def test_case_lookup():
    assert resolve_case_id("hankel") == "hankel"
    assert get_case("pentagon").slow
    with pytest.raises(ScenarioError):
        resolve_case_id("ex3.1")


def test_repro_command(capsys):
    assert main(["repro", "three-edges"]) == 0
    assert "[PASS] three-edges" in capsys.readouterr().out


@pytest.mark.parametrize(
    "name",
    [pytest.param(name, marks=pytest.mark.slow) if get_case(name).slow else name for name in get_available_cases()],
)
def test_repro_case_passes(name):
    outcome = run_case(name)
    assert outcome.passed, [c.model_dump() for c in outcome.failures()]
