import json

import pytest

from quiverhecke import Config, emit_config, parse_config, preset_half_integral, preset_skew
from quiverhecke.config import DEFAULT_OPTIONS, check_config
from quiverhecke.exceptions import ConfigError, InvalidRootDatum, UnsuitableData


def test_defaults():
    config = parse_config('{"group": {"cartan": "A2"}}')
    assert config.options == DEFAULT_OPTIONS
    assert config.torus == []
    assert config.springer == {"r": 0, "u_sets": [], "v_sets": []}
    ctx = config.build()
    assert len(ctx.table) == 1
    assert ctx.degree_bound == 4


def test_group_label_shorthand():
    assert parse_config('{"group": "B2"}').group == {"cartan": "B2"}


@pytest.mark.parametrize("make", [preset_half_integral, lambda: preset_skew("B2")])
def test_emit_and_parse(make):
    config = make()
    assert parse_config(emit_config(config)) == config


def test_max_group_order_round_trips():
    config = parse_config('{"group": "A3", "options": {"max_group_order": 24}}')
    assert config.options["max_group_order"] == 24
    assert parse_config(emit_config(config)).options["max_group_order"] == 24


def test_checks_option_accepts_a_string():
    config = parse_config('{"group": "A2", "options": {"checks": "relations,braid"}}')
    assert config.options["checks"] == ["relations", "braid"]


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        "{}",
        '{"group": "A2", "extra": 1}',
        '{"group": 3}',
        '{"group": "A2", "options": {"colour": "red"}}',
        '{"group": "A2", "options": {"degree_bound": -1}}',
        '{"group": "A2", "options": {"strict": "yes"}}',
        '{"group": "A2", "options": {"max_group_order": 0}}',
        '{"group": "A2", "options": {"max_group_order": true}}',
        '{"group": "A2", "torus": [{"kind": "torsion"}]}',
        '{"group": "A2", "springer": 5}',
    ],
)
def test_rejects_bad_documents(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_springer_count_must_match():
    config = parse_config(
        json.dumps({"group": "A2", "springer": {"r": 2, "u_sets": ["positive_roots"], "v_sets": ["all_roots"]}})
    )
    with pytest.raises(ConfigError):
        config.build()


def test_bad_group_surfaces_at_build():
    with pytest.raises(InvalidRootDatum):
        check_config(Config(group={"cartan": "E8"}))


def test_strict_mode_rejects_unsuitable_data():
    document = {
        "group": "A2",
        "springer": {"u_sets": [[[1, 0]]], "v_sets": ["all_roots"]},
    }
    loose = config_with(document, strict=False)
    ctx = loose.build()
    assert ctx.springer.r == 1
    with pytest.raises(UnsuitableData):
        config_with(document, strict=True).build()


def config_with(document, **options):
    document = dict(document, options=options)
    return parse_config(json.dumps(document))
