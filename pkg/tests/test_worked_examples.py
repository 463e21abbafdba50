import json

import pytest

from quiverhecke import preset_nilhecke
from quiverhecke.algebra import gen_unit, zero_operator
from quiverhecke.cli import build_parser, run_command
from quiverhecke.opexpr import evaluate_opexpr


def run(*argv):
    return run_command(build_parser().parse_args(list(argv)))


@pytest.fixture(scope="module")
def nilhecke():
    return preset_nilhecke("A2").build()


def test_idempotent_expression(nilhecke):
    assert evaluate_opexpr(nilhecke, "1(0)*1(0)") == gen_unit(nilhecke, 0)


def test_nilhecke_square_expression(nilhecke):
    assert evaluate_opexpr(nilhecke, "s(0,1)*s(0,1)") == zero_operator(nilhecke)


@pytest.mark.parametrize("preset", ["nilhecke", "skew", "half-integral"])
def test_commuting_coordinates_expression(preset, capsys):
    expression = "z(0,1)*z(0,2) - z(0,2)*z(0,1)"
    assert run("act", "--preset", preset, "--expr", expression, "--element", '{"0": "e1^2*e2"}') == 0
    report = json.loads(capsys.readouterr().out)
    assert report["result"]["operator"] == []
    assert report["result"]["result"] == {}


def test_check_nilhecke(capsys):
    assert run("check", "--preset", "nilhecke", "--type", "A2") == 0
    assert "✘ Failed" not in capsys.readouterr().out


def test_braid_full_stabilizer(capsys):
    assert run("braid", "--preset", "skew", "--type", "A2", "--pair", "0", "1") == 0
    report = json.loads(capsys.readouterr().out)
    coefficients = {tuple(c["word"]): c["coefficient"] for c in report["result"]["coefficients"]}
    assert coefficients == {
        (0,): {"numerator": [[[0, 0], "1"]], "denominator": [[[0, 0], "1"]]},
        (1,): {"numerator": [[[0, 0], "-1"]], "denominator": [[[0, 0], "1"]]},
    }
    predicted = {tuple(c["word"]): c["coefficient"] for c in report["result"]["closed_form"]}
    assert predicted == {(0,): [[[0, 0], "1"]], (1,): [[[0, 0], "-1"]]}


def test_describe_half_integral(capsys):
    assert run("describe", "--preset", "half-integral") == 0
    assert "#I = 3" in capsys.readouterr().out
