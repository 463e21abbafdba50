from collections import Counter

import pytest

from quiverhecke import CheckInterface
from quiverhecke.algebra import gen_sigma
from quiverhecke.exceptions import CheckSkipped, IdentityMismatch, OperatorMismatch, ReportViolation
from quiverhecke.localize import Localization
from quiverhecke.polyops import RatFun
from quiverhecke.report import CheckReport


@pytest.fixture
def interface(skew_a2):
    return CheckInterface(skew_a2, seed=7)


def test_operator_helpers(interface):
    interface.assert_operators_equal("s(0,0)*s(0,0)", "-2*s(0,0)")
    interface.assert_operators_equal(interface.operator("s(0,1)"), gen_sigma(interface.ctx, 0, 1))
    interface.assert_operator_zero("s(0,0)*s(0,0) + 2*s(0,0)")
    interface.assert_acts_equally("s(0,0) + 1(0)", "s(0,0) + 1")
    with pytest.raises(OperatorMismatch):
        interface.assert_operators_equal("s(0,0)", "s(0,1)", "different reflections")
    with pytest.raises(OperatorMismatch):
        interface.assert_operator_zero("s(0,0)")
    with pytest.raises(OperatorMismatch):
        interface.assert_acts_equally("z(0,1)", "z(0,2)")


def test_polynomial_helpers(interface):
    ring = interface.ctx.ring
    e1, e2 = ring.gens
    interface.assert_polys_equal(e1 * e2, e2 * e1)
    interface.assert_ratfuns_equal(RatFun(e1) / RatFun(e1 + e2), RatFun(2 * e1) / RatFun(2 * e1 + 2 * e2))
    interface.assert_multisets_equal(Counter({(1, 0): 1, (0, 1): 0}), Counter({(1, 0): 1}))
    with pytest.raises(IdentityMismatch):
        interface.assert_polys_equal(e1, e2)
    with pytest.raises(IdentityMismatch):
        interface.assert_ratfuns_equal(RatFun(e1), RatFun(e2))
    with pytest.raises(IdentityMismatch):
        interface.assert_multisets_equal(Counter({(1, 0): 2}), Counter({(1, 0): 1}))


def test_report_helpers(interface):
    passing = CheckReport("fine", details={"count": 2})
    interface.assert_report_passes(passing)
    assert interface.details["fine"] == {"count": 2, "violations": 0}
    failing = CheckReport("broken")
    failing.fail({"index": 0})
    with pytest.raises(ReportViolation) as info:
        interface.assert_report_passes(failing)
    assert "broken" in str(info.value)
    assert interface.details["broken"]["violations"] == 1
    with pytest.raises(IdentityMismatch):
        interface.assert_true(False, "nope")
    interface.assert_true(True, "fine")


def test_small_enough(interface):
    assert interface.small_enough()
    assert "skipped" not in interface.details
    assert not interface.small_enough(limit=5)
    assert interface.details["skipped"] == "#W = 6 exceeds 5"


def test_skips(interface, skew_a2):
    with pytest.raises(CheckSkipped) as info:
        interface.skip("not applicable")
    assert not info.value.over_bound
    interface.require_small_group()
    assert interface.max_group_order == 48
    bounded = CheckInterface(skew_a2, max_group_order=5)
    with pytest.raises(CheckSkipped) as info:
        bounded.require_small_group()
    assert info.value.over_bound
    assert str(info.value) == "#W = 6 exceeds 5"


def test_localization_is_cached(interface):
    loc = interface.localization
    assert isinstance(loc, Localization)
    assert interface.localization is loc
    assert interface.seed == 7
    assert interface.quiver is None
