import enum
from typing import Dict, Optional

from ..config import DEFAULT_OPTIONS
from ..localize import Localization
from ..repdata import AlgebraData
from ..report import CheckReport


class CheckResult(enum.Enum):
    """ Enum representing the result of running a check """

    UNRUN = 0
    SUCCESS = 1
    FAILED = 2
    SKIPPED = 3


SPECIAL_CHECK_NAMES = {"all", "unrun", "failed"}


class Check:
    """ Holds data about a specific check.

    :param str name: The name of the check, checked against the reserved selection names
    :param function func: The function that makes up this check; it receives a :py:class:`CheckInterface`
    :param str suite: The suite the check belongs to, used to select groups of checks
    :raises: ValueError
    """

    def __init__(self, name, func, suite=None):
        if name in SPECIAL_CHECK_NAMES:
            raise ValueError("{} is not a valid check name".format(name))
        self.name = name
        self.func = func
        self.suite = suite
        self.last_run = 0.0
        self.result = CheckResult.UNRUN
        self.counterexample: Optional[str] = None
        self.details: Dict = {}
        self.over_bound = False


class CheckInterface:
    """ The assertion helpers checks are written with, bound to one assembled configuration.

    .. note::
        Report-producing helpers (``assert_report_passes``) record the report's details on the running
        check, so that they end up in the JSON report even when the check passes.

    .. note::
        ``assert_*`` helpers raise a :py:class:`CheckFailure <quiverhecke.exceptions.CheckFailure>` subclass;
        the runner catches it and marks the check failed. :py:meth:`skip` raises
        :py:class:`CheckSkipped <quiverhecke.exceptions.CheckSkipped>` instead, which marks it skipped.

    :param AlgebraData ctx: The assembled configuration.
    :param QuiverSpec quiver: The quiver the configuration was built from, if it is a KLR preset.
    :param int seed: Seed for checks that sample random operators.
    :param int max_group_order: Checks that enumerate ``𝕎`` skip themselves above this order.
    """

    def __init__(self, ctx: AlgebraData, quiver=None, seed=0, max_group_order=DEFAULT_OPTIONS["max_group_order"]):
        self.ctx = ctx
        self.quiver = quiver
        self.seed = seed
        self.max_group_order = max_group_order
        self.details: Dict = {}
        self._localization: Optional[Localization] = None

    @property
    def localization(self) -> Localization:
        """ The :py:class:`Localization <quiverhecke.localize.Localization>` of the configuration, built on first use. """
        if self._localization is None:
            self._localization = Localization(self.ctx)
        return self._localization

    def note(self, key, value):
        """ Record a value in the running check's details. **Helper Function** """
        self.details[key] = value

    # Imported Methods
    from ._operators import (
        operator,
        assert_operators_equal,
        assert_operator_zero,
        assert_acts_equally,
    )
    from ._polynomials import assert_polys_equal, assert_ratfuns_equal, assert_multisets_equal
    from ._reports import assert_report_passes, assert_true, require_small_group, skip, small_enough
