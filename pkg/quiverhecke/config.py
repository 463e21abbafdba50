"""
The JSON configuration document: group, torus, springer and options.

>>> config = parse_config('{"group": {"cartan": "A2"}}')
>>> config.options["degree_bound"]
4
>>> parse_config(emit_config(config)) == config
True
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List

from .exceptions import ConfigError, QuiverHeckeError
from .repdata import AlgebraData, SpringerData, assemble
from .rootcore import build_root_datum
from .subgroup import TorusConstraint, fixed_subsystem

logger = logging.getLogger(__name__)

TOP_LEVEL_KEYS = ("group", "torus", "springer", "options")
DEFAULT_OPTIONS = {"strict": False, "degree_bound": 4, "checks": ["all"], "seed": 0, "max_group_order": 48}


@dataclass
class Config:
    """ A parsed configuration.

    :param dict group: Root datum spec (``{"cartan": ...}``, ``{"gl": d}`` or explicit data).
    :param list torus: :py:class:`TorusConstraint <quiverhecke.subgroup.TorusConstraint>` list.
    :param dict springer: ``{"r", "u_sets", "v_sets"}`` with keywords kept as written.
    :param dict options: ``strict``, ``degree_bound``, ``checks``, ``seed`` and ``max_group_order`` (the
        largest ``#𝕎`` that checks enumerating the whole group run on).
    """

    group: Dict[str, Any]
    torus: List[TorusConstraint] = field(default_factory=list)
    springer: Dict[str, Any] = field(default_factory=lambda: {"r": 0, "u_sets": [], "v_sets": []})
    options: Dict[str, Any] = field(default_factory=lambda: dict(DEFAULT_OPTIONS))

    def build(self) -> AlgebraData:
        """ Construct the root datum, subsystem, coset table and representation data.

        :raises: QuiverHeckeError subclasses for invalid data
        """
        datum = build_root_datum(self.group)
        sub = fixed_subsystem(datum, self.torus)
        springer = SpringerData.from_json(datum, self.springer)
        return assemble(
            datum, sub, springer, degree_bound=self.options["degree_bound"], strict=self.options["strict"]
        )

    def to_json(self):
        return {
            "group": self.group,
            "torus": [c.to_json() for c in self.torus],
            "springer": self.springer,
            "options": self.options,
        }


def _normalise_options(options) -> Dict[str, Any]:
    if not isinstance(options, dict):
        raise ConfigError("options must be an object")
    unknown = set(options) - set(DEFAULT_OPTIONS)
    if unknown:
        raise ConfigError("Unknown options: {}".format(", ".join(sorted(unknown))))
    merged = dict(DEFAULT_OPTIONS)
    merged.update(options)
    if not isinstance(merged["strict"], bool):
        raise ConfigError("options.strict must be a boolean")
    if not isinstance(merged["degree_bound"], int) or merged["degree_bound"] < 0:
        raise ConfigError("options.degree_bound must be a nonnegative integer")
    order = merged["max_group_order"]
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise ConfigError("options.max_group_order must be a positive integer")
    if isinstance(merged["checks"], str):
        merged["checks"] = [c for c in merged["checks"].split(",") if c]
    merged["checks"] = list(merged["checks"])
    merged["seed"] = int(merged["seed"])
    return merged


def config_from_json(data) -> Config:
    """ Validate a decoded JSON object and turn it into a :py:class:`Config`.

    :raises: ConfigError
    """
    if not isinstance(data, dict):
        raise ConfigError("A config must be a JSON object")
    unknown = set(data) - set(TOP_LEVEL_KEYS)
    if unknown:
        raise ConfigError("Unknown config keys: {}".format(", ".join(sorted(unknown))))
    if "group" not in data:
        raise ConfigError("A config needs a group")
    group = data["group"]
    if isinstance(group, str):
        group = {"cartan": group}
    if not isinstance(group, dict):
        raise ConfigError("group must be an object or a Cartan label")
    torus = [TorusConstraint.from_json(c) for c in data.get("torus", [])]
    springer = data.get("springer") or {"r": 0, "u_sets": [], "v_sets": []}
    if not isinstance(springer, dict):
        raise ConfigError("springer must be an object")
    springer = dict(springer)
    springer.setdefault("u_sets", [])
    springer.setdefault("v_sets", [])
    springer.setdefault("r", len(springer["u_sets"]))
    return Config(group=dict(group), torus=torus, springer=springer, options=_normalise_options(data.get("options", {})))


def parse_config(text: str) -> Config:
    """ Parse a JSON config document.

    :raises: ConfigError
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError("Config is not valid JSON: {} (at char {})".format(err.msg, err.pos))
    return config_from_json(data)


def emit_config(config: Config) -> str:
    return json.dumps(config.to_json(), indent=2, sort_keys=True)


def check_config(config: Config) -> AlgebraData:
    """ Build a config and log what was built; errors propagate unchanged. """
    try:
        ctx = config.build()
    except QuiverHeckeError:
        logger.error("Could not build configuration %s", config.group)
        raise
    logger.info("Built %s with %d indices", config.group, len(ctx.table))
    return ctx
