import logging
import sys

from .CheckInterface import Check, CheckInterface, CheckResult
from .collector import CheckCollector
from .config import Config, emit_config, parse_config
from .presets import QuiverSpec, preset_half_integral, preset_klr, preset_nilhecke, preset_skew
from .runner import CheckRunner


def run_quiverhecke(sysargs):
    """ This is the function the ``quiverhecke`` console script and ``python -m quiverhecke`` call.

    Parses the command line and runs the command, then exits: ``0`` if every selected check passed,
    ``1`` if one failed and ``2`` if the configuration or an expression could not be read.

    :param list sysargs: The list returned by ``sys.argv``, this function parses it and will handle errors in format
    """
    from .cli import build_parser, run_command

    parser = build_parser()
    sysargs = list(sysargs)
    sysargs.pop(0)  # Pops off the first arg (the program name)
    args = parser.parse_args(sysargs)
    logging.basicConfig(level=getattr(logging, args.log_level), format="%(levelname)s %(name)s: %(message)s")
    sys.exit(run_command(args))


def main():
    run_quiverhecke(sys.argv)
