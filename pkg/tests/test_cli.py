import json

import pytest

from quiverhecke import parse_config, run_quiverhecke
from quiverhecke.cli import build_parser, run_command


def run(*argv):
    return run_command(build_parser().parse_args(list(argv)))


def last_json(text):
    """ The JSON document printed after any stats table. """
    return json.loads(text[text.index("{"):])


def test_describe_half_integral(capsys):
    assert run("describe", "--preset", "half-integral") == 0
    out = capsys.readouterr().out
    assert "#I = 3" in out
    assert "#W = 2" in out
    assert "#𝕎 = 6" in out


def test_preset_round_trips(capsys):
    assert run("preset", "--preset", "skew", "--type", "B2") == 0
    config = parse_config(capsys.readouterr().out)
    assert config.group == {"cartan": "B2"}
    assert config.springer["r"] == 1


NOT_APPLICABLE = {
    "nilhecke": {"group_algebra", "klr_oracle"},
    "skew": {"klr_oracle"},
    "half-integral": {"quadratic_presets", "group_algebra", "klr_oracle"},
}


@pytest.mark.parametrize("preset", ["nilhecke", "skew", "half-integral"])
def test_check_all_passes(preset, capsys):
    assert run("check", "--preset", preset) == 0
    captured = capsys.readouterr()
    assert "✘ Failed" not in captured.out
    assert "not run" not in captured.err
    report = last_json(captured.out)
    assert report["checks"]
    statuses = {entry["name"]: entry["status"] for entry in report["checks"]}
    skipped = {name for name, status in statuses.items() if status == "skipped"}
    assert skipped == NOT_APPLICABLE[preset]
    assert all(status == "passed" for name, status in statuses.items() if name not in skipped)


def test_check_selection(capsys):
    assert run("check", "--preset", "skew", "--checks", "braid,coset_table") == 0
    report = last_json(capsys.readouterr().out)
    assert [entry["name"] for entry in report["checks"]] == ["coset_table", "braid_defects"]
    defects = report["checks"][1]["details"]["defects"]
    assert defects[0]["m"] == 3


def test_check_unknown_selection(capsys):
    assert run("check", "--preset", "nilhecke", "--checks", "no_such_check") == 2
    assert "no_such_check" in capsys.readouterr().err


def test_braid_command(capsys):
    assert run("braid", "--preset", "skew", "--type", "B2", "--pair", "0", "1") == 0
    report = json.loads(capsys.readouterr().out)
    coefficients = {tuple(c["word"]): c["coefficient"]["numerator"] for c in report["result"]["coefficients"]}
    assert coefficients == {(0, 1): [[[0, 0], "2"]], (1, 0): [[[0, 0], "-2"]]}
    assert report["result"]["closed_form_known"] is True
    assert report["checks"][0]["status"] == "passed"


def test_braid_rejects_bad_pairs(capsys):
    assert run("braid", "--preset", "skew", "--pair", "0", "0") == 2
    assert run("braid", "--preset", "skew", "--index", "4") == 2


def test_act(capsys):
    assert run("act", "--preset", "nilhecke", "--expr", "s(0,0)", "--element", '{"0": "e1"}') == 0
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["result"] == {"0": [[[0, 0], "-2"]]}
    assert report["result"]["expression"] == "s(0,0)"


def test_act_accepts_term_lists(capsys):
    element = json.dumps({"0": [[[0, 1], "1"]]})
    assert run("act", "--preset", "skew", "--expr", "s(0,0)", "--element", element) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["result"] == {"0": [[[1, 0], "1"]]}


@pytest.mark.parametrize(
    "extra",
    [
        ["--expr", "s(0,"],
        ["--expr", "1(3)"],
        ["--expr", "1(0)", "--element", '{"5": "1"}'],
        ["--expr", "1(0)", "--element", "[1]"],
        ["--expr", "1(0)", "--element", '{"0": "e9"}'],
        [],
    ],
)
def test_act_errors(extra, capsys):
    assert run("act", "--preset", "nilhecke", *extra) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_localize_and_euler(capsys, tmp_path):
    out = tmp_path / "localize.json"
    assert run("localize", "--preset", "half-integral", "--out", str(out)) == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["checks"] == [{"name": "pathway", "status": "passed", "details": {}}]
    assert len(report["result"]["theta_of_units"]) == 3
    assert run("euler", "--preset", "nilhecke", "--type", "A1") == 0
    euler = json.loads(capsys.readouterr().out)
    assert len(euler["result"]["lambda"]) == 2


def test_config_file_and_overrides(tmp_path, capsys):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"group": "A1", "options": {"checks": ["relations"]}}), encoding="utf-8")
    assert run("check", "--config", str(path), "--degree-bound", "2", "--seed", "3") == 0
    report = last_json(capsys.readouterr().out)
    assert report["config_echo"]["options"]["degree_bound"] == 2
    assert report["config_echo"]["options"]["seed"] == 3
    names = [entry["name"] for entry in report["checks"]]
    # "relations" names a suite as well as a check; the suite wins
    assert names[0] == "relations"
    assert "normal_forms" in names
    statuses = {entry["name"]: entry["status"] for entry in report["checks"]}
    assert statuses.pop("group_algebra") == "skipped"
    assert set(statuses.values()) == {"passed"}


def test_large_groups_are_reported_incomplete(capsys):
    assert run("check", "--preset", "nilhecke", "--type", "A4", "--checks", "relations") == 1
    captured = capsys.readouterr()
    assert "not run for #𝕎 above 48" in captured.err
    entries = {entry["name"]: entry for entry in last_json(captured.out)["checks"]}
    assert entries["relations"]["status"] == "passed"
    assert entries["expression_identities"]["status"] == "passed"
    for name in ("word_independence", "normal_forms", "random_products"):
        assert entries[name]["status"] == "skipped"
        assert entries[name]["details"]["skipped"] == "#W = 120 exceeds 48"
    assert "➖ Skipped" in captured.out


def test_max_group_order_option(capsys):
    assert run("check", "--preset", "nilhecke", "--checks", "normal_forms", "--max-group-order", "5") == 1
    entries = last_json(capsys.readouterr().out)["checks"]
    assert entries == [{"name": "normal_forms", "status": "skipped", "details": {"skipped": "#W = 6 exceeds 5"}}]
    assert run("check", "--preset", "nilhecke", "--checks", "normal_forms", "--max-group-order", "6") == 0


def test_non_borel_data_skips_borel_checks(tmp_path, capsys):
    path = tmp_path / "config.json"
    document = {"group": "A2", "springer": {"u_sets": [[]], "v_sets": ["all_roots"]}}
    path.write_text(json.dumps(document), encoding="utf-8")
    assert run("check", "--config", str(path), "--checks", "normal_forms,random_products,leading_terms") == 0
    captured = capsys.readouterr()
    assert "not run" not in captured.err
    for entry in last_json(captured.out)["checks"]:
        assert entry["status"] == "skipped"
        assert entry["details"]["skipped"] == "non-Borel data"


def test_klr_preset(tmp_path, capsys):
    path = tmp_path / "quiver.json"
    path.write_text(json.dumps({"vertices": [1, 2], "arrows": [[1, 2]], "dimension": [2, 1]}), encoding="utf-8")
    assert run("check", "--preset", "klr", "--quiver", str(path), "--checks", "klr,relations") == 0
    report = last_json(capsys.readouterr().out)
    assert {"klr_oracle", "relations"} <= {entry["name"] for entry in report["checks"]}


@pytest.mark.parametrize(
    "argv",
    [
        ["describe"],
        ["describe", "--preset", "klr"],
        ["describe", "--config", "/nonexistent/config.json"],
        ["describe", "--preset", "nilhecke", "--type", "E6"],
        ["describe", "--preset", "nilhecke", "--degree-bound", "-1"],
        ["describe", "--preset", "nilhecke", "--max-group-order", "0"],
    ],
)
def test_configuration_errors(argv, capsys):
    assert run(*argv) == 2
    assert "error:" in capsys.readouterr().err


def test_config_and_preset_conflict(tmp_path):
    path = tmp_path / "config.json"
    path.write_text('{"group": "A2"}', encoding="utf-8")
    assert run("describe", "--config", str(path), "--preset", "skew") == 2


def test_console_entry_exits_with_status():
    with pytest.raises(SystemExit) as info:
        run_quiverhecke(["quiverhecke", "describe", "--preset", "nilhecke", "--type", "A1"])
    assert info.value.code == 0
    with pytest.raises(SystemExit) as info:
        run_quiverhecke(["quiverhecke", "describe"])
    assert info.value.code == 2
