import json

from ..exceptions import CheckSkipped, IdentityMismatch, ReportViolation
from ..report import CheckReport
from ..rootcore import all_elements


def assert_report_passes(self, report: CheckReport):
    """ Record ``report`` under its name and raise if it lists violations.

    :raises: ReportViolation with the first violation as counterexample
    """
    self.details[report.name] = dict(report.details, violations=len(report.violations))
    if not report.passed:
        raise ReportViolation("{}: {}".format(report.name, json.dumps(report.violations[0], sort_keys=True, default=str)))


def assert_true(self, condition, what):
    """ Assert a boolean identity check returned ``True``.

    :raises: IdentityMismatch
    """
    if not condition:
        raise IdentityMismatch(what)


def skip(self, reason):
    """ Stop the running check and mark it skipped.

    :raises: CheckSkipped
    """
    raise CheckSkipped(reason)


def small_enough(self, limit=None) -> bool:
    """ Whether ``#𝕎`` is at most ``limit`` (the configured ``max_group_order`` by default); notes the
    reason otherwise. **Helper Function** """
    limit = self.max_group_order if limit is None else limit
    order = len(all_elements(self.ctx.datum))
    if order > limit:
        self.note("skipped", "#W = {} exceeds {}".format(order, limit))
        return False
    return True


def require_small_group(self):
    """ Skip the running check unless :py:meth:`small_enough` holds.

    :raises: CheckSkipped
    """
    if not self.small_enough():
        raise CheckSkipped(self.details["skipped"], over_bound=True)
