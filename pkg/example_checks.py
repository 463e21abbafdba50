"""
A small custom check suite for the skew group ring of ``B2``.

Run it with ``python example_checks.py``; it exits 1 if any check fails.
"""

import sys

from quiverhecke import CheckCollector, CheckInterface, CheckRunner, preset_skew
from quiverhecke.algebra import braid_defect, sigma

checks = CheckCollector()


@checks(suite="quadratic")
def sigma_squares(interface):
    ctx = interface.ctx
    for j in range(ctx.rank):
        s = sigma(ctx, ctx.datum.simple_reflection(j))
        interface.assert_operators_equal(s * s, s.scale(-2), "σ(s_{})²".format(j))


@checks(suite="quadratic")
def expression_square(interface):
    interface.assert_operators_equal("s(0,0)*s(0,0)", "-2*s(0,0)")


@checks(suite="braid")
def braid_coefficients(interface):
    ctx = interface.ctx
    defect = braid_defect(ctx, 0, 0, 1)
    values = {word: c for word, c in defect.by_word(ctx.datum).items()}
    interface.note("words", sorted(values))
    interface.assert_ratfuns_equal(values.get((0, 1)), 2, "Q_st")
    interface.assert_ratfuns_equal(values.get((1, 0)), -2, "Q_ts")


if __name__ == "__main__":
    config = preset_skew("B2")
    runner = CheckRunner(checks, CheckInterface(config.build()), config_echo=config.to_json())
    failed = runner.run(sys.argv[1:] or "all")
    print(runner.build_stats(), end="")
    sys.exit(1 if failed else 0)
