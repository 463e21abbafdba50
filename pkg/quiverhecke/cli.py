"""
Command dispatch for ``quiverhecke``: argument parsing, configuration loading and the JSON report.

Commands are ``describe``, ``check``, ``braid``, ``act``, ``localize``, ``euler`` and ``preset``. The exit
status is ``0`` when every selected check passed or did not apply, ``1`` when a check failed or was not run
because ``#𝕎`` exceeds ``max_group_order``, and ``2`` when the configuration or an expression could not be read.
"""

import argparse
import json
import logging
import sys
import time

from .CheckInterface import CheckInterface, CheckResult
from .algebra import ModuleElement, apply, braid_assumption_holds, braid_closed_form, braid_defect
from .config import check_config, emit_config, parse_config
from .exceptions import ConfigError, ParseError, QuiverHeckeError, UnknownIndex
from .localize import (
    Localization,
    eu_Zbar_s,
    eu_Zbar_w,
    fp_apply,
    lambda_,
    localize_sigma,
    matrix_to_json,
    pathway_check,
    theta,
    vector_to_json,
)
from .opexpr import parse_opexpr
from .polyops import poly_from_json, poly_from_text, poly_to_json, ratfun_to_json
from .presets import QuiverSpec, preset_half_integral, preset_klr, preset_nilhecke, preset_skew
from .repdata import AlgebraData
from .rootcore import all_elements, reduced_word
from .runner import CheckRunner
from .suites import collector

logger = logging.getLogger(__name__)

COMMANDS = ("describe", "check", "braid", "act", "localize", "euler", "preset")
PRESETS = ("nilhecke", "skew", "klr", "half-integral")

__all__ = ["build_parser", "load_config", "parse_config", "run_command"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverhecke",
        description="Build generalized quiver Hecke algebras from root data, check their presentation "
        "and cross-check it against fixed-point localization.",
    )
    parser.add_argument("command", choices=COMMANDS, help="What to do with the configuration.")
    source = parser.add_argument_group("Configuration")
    source.add_argument("--config", metavar="PATH", help="JSON configuration file.")
    source.add_argument("--preset", choices=PRESETS, help="Use a ready-made configuration instead of --config.")
    source.add_argument("--type", metavar="LABEL", default="A2", help="Cartan label for the nilhecke and skew presets.")
    source.add_argument("--quiver", metavar="PATH", help="Quiver JSON for the klr preset.")
    options = parser.add_argument_group("Options (override the configuration)")
    options.add_argument("--strict", action="store_true", default=None, help="Fail on unsuitable representation data.")
    options.add_argument("--degree-bound", type=int, metavar="N", help="Monomial degree bound for integrality tests.")
    options.add_argument("--checks", metavar="LIST", help="Comma-separated checks or suites, default all.")
    options.add_argument("--seed", type=int, metavar="N", help="Seed for randomised checks.")
    options.add_argument(
        "--max-group-order", type=int, metavar="N", help="Largest #𝕎 that checks enumerating the group run on."
    )
    command = parser.add_argument_group("Command arguments")
    command.add_argument("--index", type=int, default=0, metavar="I", help="Coset index for braid.")
    command.add_argument("--pair", type=int, nargs=2, default=(0, 1), metavar=("S", "T"), help="Simple pair for braid.")
    command.add_argument("--expr", metavar="EXPR", help="Operator expression for act, e.g. 's(0,1)*z(0,1)'.")
    command.add_argument(
        "--element", metavar="JSON", default='{"0": "1"}', help="Module element for act: index to polynomial."
    )
    output = parser.add_argument_group("Output")
    output.add_argument("--out", metavar="PATH", help="Write the JSON report here instead of stdout.")
    output.add_argument(
        "--log-level", default="WARNING", choices=("DEBUG", "INFO", "WARNING", "ERROR"), help="Logging threshold."
    )
    return parser


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as err:
        raise ConfigError("Cannot read {}: {}".format(path, err))


def load_config(args):
    """ The configuration and, for KLR presets, the quiver it came from.

    :raises: ConfigError
    """
    quiver = None
    if args.config and args.preset:
        raise ConfigError("Give either --config or --preset, not both")
    if args.config:
        config = parse_config(_read(args.config))
    elif args.preset == "nilhecke":
        config = preset_nilhecke(args.type)
    elif args.preset == "skew":
        config = preset_skew(args.type)
    elif args.preset == "half-integral":
        config = preset_half_integral()
    elif args.preset == "klr":
        if not args.quiver:
            raise ConfigError("The klr preset needs --quiver")
        try:
            quiver = QuiverSpec.from_json(json.loads(_read(args.quiver)))
        except json.JSONDecodeError as err:
            raise ConfigError("Quiver is not valid JSON: {}".format(err))
        config = preset_klr(quiver)
    else:
        raise ConfigError("Give --config or --preset")
    overrides = {
        "strict": args.strict,
        "degree_bound": args.degree_bound,
        "checks": [c for c in args.checks.split(",") if c] if args.checks else None,
        "seed": args.seed,
        "max_group_order": args.max_group_order,
    }
    config.options.update({k: v for k, v in overrides.items() if v is not None})
    if config.options["degree_bound"] < 0:
        raise ConfigError("--degree-bound must be nonnegative")
    if config.options["max_group_order"] < 1:
        raise ConfigError("--max-group-order must be positive")
    return config, quiver


def describe(ctx: AlgebraData):
    """ Group orders, roots, the index legend and the ``h``/``q`` tables. """
    datum, sub, table = ctx.datum, ctx.sub, ctx.table
    return {
        "weyl_order": len(all_elements(datum)),
        "roots": [list(a) for a in sub.roots],
        "positive_roots": [list(a) for a in sub.positives],
        "group_order": sub.group_order,
        "indices": len(table),
        "representatives": table.describe(),
        "h": [[ctx.h[(i, j)] for j in range(ctx.rank)] for i in table.indices],
        "q": [[str(ctx.q[(i, j)].as_expr()) for j in range(ctx.rank)] for i in table.indices],
        "stabilized": [[ctx.stabilized(i, j) for j in range(ctx.rank)] for i in table.indices],
    }


def format_description(info) -> str:
    lines = [
        "#𝕎 = {}".format(info["weyl_order"]),
        "Φ = {}".format(info["roots"]),
        "#W = {}".format(info["group_order"]),
        "#I = {}".format(info["indices"]),
        "index  x_i",
    ]
    for row in info["representatives"]:
        lines.append("{:>5}  {}".format(row["index"], row["rep"]))
    lines.append("index  h_i(s) / q_i(s)")
    for i, (hs, qs) in enumerate(zip(info["h"], info["q"])):
        lines.append("{:>5}  {}".format(i, "  ".join("{}:{}".format(h, q) for h, q in zip(hs, qs))))
    return "\n".join(lines)


def braid(ctx: AlgebraData, index, s, t):
    if index not in ctx.table.indices:
        raise UnknownIndex("Index {} is not in 0..{}".format(index, len(ctx.table) - 1))
    if not (0 <= s < ctx.rank and 0 <= t < ctx.rank) or s == t:
        raise UnknownIndex("({}, {}) is not a pair of distinct simple reflections".format(s, t))
    defect = braid_defect(ctx, index, s, t)
    payload = defect.to_json(ctx.datum)
    predicted = braid_closed_form(ctx, index, s, t)
    payload["closed_form_known"] = predicted is not None
    problems = []
    if braid_assumption_holds(ctx, index, s, t) and not defect.all_polynomial:
        problems.append("non-polynomial coefficient")
    if predicted is not None:
        payload["closed_form"] = [
            {"word": list(reduced_word(ctx.datum, w)), "coefficient": poly_to_json(f)} for w, f in predicted.items()
        ]
        if set(predicted) != set(defect.coefficients) or any(defect.coefficients[w] != f for w, f in predicted.items()):
            problems.append("closed form mismatch")
    return payload, problems


def parse_element(ctx: AlgebraData, text: str) -> ModuleElement:
    """ ``{"i": "polynomial", ...}`` to a module element.

    :raises: ParseError, UnknownIndex
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError("Module element is not valid JSON: {}".format(err.msg), err.pos)
    if not isinstance(data, dict):
        raise ParseError("Module element must be an object mapping indices to polynomials")
    components = {}
    for key, value in data.items():
        try:
            i = int(key)
        except ValueError:
            raise ParseError("Module element index {!r} is not an integer".format(key))
        if i not in ctx.table.indices:
            raise UnknownIndex("Index {} is not in 0..{}".format(i, len(ctx.table) - 1))
        components[i] = poly_from_text(ctx.ring, value) if isinstance(value, str) else poly_from_json(ctx.ring, value)
    return ModuleElement(ctx, components)


def act(ctx: AlgebraData, expr: str, element: str):
    if not expr:
        raise ParseError("act needs --expr")
    recipe = parse_opexpr(expr)
    operator = recipe.evaluate(ctx)
    m = parse_element(ctx, element)
    return {
        "expression": str(recipe),
        "operator": operator.to_json(),
        "element": m.to_json(),
        "result": apply(operator, m).to_json(),
    }


def localize(ctx: AlgebraData):
    loc = Localization(ctx)
    datum = ctx.datum
    generators, unit_images, sigma_images = [], [], []
    for i in ctx.table.indices:
        generators.append({"generator": "1", "index": i, "matrix": matrix_to_json(datum, loc.localize_unit(i))})
        unit_image = theta(loc, ModuleElement.single(ctx, i, ctx.ring.one))
        unit_images.append({"index": i, "theta": vector_to_json(datum, unit_image)})
        for j in range(ctx.rank):
            sigma = localize_sigma(loc, i, j)
            generators.append({"generator": "sigma", "index": i, "simple": j, "matrix": matrix_to_json(datum, sigma)})
            image = fp_apply(loc, sigma, unit_image)
            sigma_images.append({"index": i, "simple": j, "image": vector_to_json(datum, image)})
    report = pathway_check(loc)
    payload = {"generators": generators, "theta_of_units": unit_images, "sigma_on_units": sigma_images}
    payload["pathway"] = report.to_json()
    return payload, report


def euler(ctx: AlgebraData):
    loc = Localization(ctx)
    datum = ctx.datum
    lambdas, walls = [], []
    for x in all_elements(datum):
        word = list(reduced_word(datum, x))
        lambdas.append({"element": word, "lambda": poly_to_json(lambda_(loc, x))})
        for j in range(ctx.rank):
            walls.append(
                {
                    "element": word,
                    "simple": j,
                    "stabilizes": loc.stabilizes(x, j),
                    "shortage": poly_to_json(loc.shortage(x, j)),
                    "eu_zbar_s": ratfun_to_json(eu_Zbar_s(loc, x, j)),
                    "eu_zbar_w": poly_to_json(eu_Zbar_w(loc, x, datum.simple_reflection(j))),
                }
            )
    return {"lambda": lambdas, "walls": walls}


def _emit(report, path):
    text = json.dumps(report, indent=2, sort_keys=False, default=str)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def run_command(args) -> int:
    """ Execute one parsed command line and return the exit status. """
    try:
        config, quiver = load_config(args)
    except QuiverHeckeError as err:
        print("error: {}".format(err), file=sys.stderr)
        return 2
    if args.command == "preset":
        text = emit_config(config)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return 0
    echo = config.to_json()
    start = time.perf_counter()
    try:
        ctx = check_config(config)
    except QuiverHeckeError as err:
        print("error: {}".format(err), file=sys.stderr)
        return 2

    if args.command == "check":
        interface = CheckInterface(
            ctx, quiver=quiver, seed=config.options["seed"], max_group_order=config.options["max_group_order"]
        )
        runner = CheckRunner(collector, interface, config_echo=echo)
        try:
            failed = runner.run(config.options["checks"])
        except ConfigError as err:
            print("error: {}".format(err), file=sys.stderr)
            return 2
        print(runner.build_stats([c for c in collector if c.result is not CheckResult.UNRUN]), end="")
        _emit(runner.report(), args.out)
        if failed:
            print("first failing check: {}".format(runner.first_failure().name), file=sys.stderr)
        incomplete = runner.incomplete()
        if incomplete:
            print(
                "not run for #𝕎 above {}: {}".format(
                    config.options["max_group_order"], ", ".join(c.name for c in incomplete)
                ),
                file=sys.stderr,
            )
        return 1 if failed or incomplete else 0

    checks = []
    try:
        if args.command == "describe":
            result = describe(ctx)
            print(format_description(result))
        elif args.command == "braid":
            result, problems = braid(ctx, args.index, *args.pair)
            checks.append({"name": "braid", "status": "failed" if problems else "passed", "details": {"problems": problems}})
        elif args.command == "act":
            result = act(ctx, args.expr, args.element)
        elif args.command == "localize":
            result, report = localize(ctx)
            entry = {"name": "pathway", "status": "passed" if report.passed else "failed", "details": report.details}
            if not report.passed:
                entry["counterexample"] = json.dumps(report.violations[0], default=str)
            checks.append(entry)
        else:
            result = euler(ctx)
    except (ParseError, UnknownIndex) as err:
        print("error: {}".format(err), file=sys.stderr)
        return 2
    except QuiverHeckeError as err:
        checks.append({"name": args.command, "status": "failed", "details": {}, "counterexample": str(err)})
        result = None
    report = {
        "config_echo": echo,
        "command": args.command,
        "result": result,
        "checks": checks,
        "timings": {args.command: round(time.perf_counter() - start, 6)},
    }
    if args.command != "describe" or args.out:
        _emit(report, args.out)
    failures = [c for c in checks if c["status"] == "failed"]
    if failures:
        print("first failing check: {}".format(failures[0]["name"]), file=sys.stderr)
        return 1
    return 0

