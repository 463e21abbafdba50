"""
:py:class:`CheckRunner` runs the checks of a :py:class:`CheckCollector <quiverhecke.collector.CheckCollector>`
against one :py:class:`CheckInterface <quiverhecke.CheckInterface.CheckInterface>`, keeps per-check results
and assembles the machine-readable report.
"""

import logging
import time
from typing import Iterable, List, Union

from .CheckInterface import Check, CheckInterface, CheckResult
from .collector import CheckCollector
from .exceptions import CheckFailure, CheckSkipped, ConfigError, QuiverHeckeError

logger = logging.getLogger(__name__)

STATUS_NAMES = {
    CheckResult.UNRUN: "unrun",
    CheckResult.SUCCESS: "passed",
    CheckResult.FAILED: "failed",
    CheckResult.SKIPPED: "skipped",
}


class CheckRunner:
    """ Runs checks and remembers their results between runs.

    :param CheckCollector collector: The collector that gathered the checks
    :param CheckInterface interface: The interface handed to every check
    :param dict config_echo: The configuration as JSON, copied into the report
    """

    def __init__(self, collector: CheckCollector, interface: CheckInterface, config_echo=None):
        self._checks = collector
        self.interface = interface
        self.config_echo = config_echo or {}
        self.failure = False
        self.reset()

    def reset(self):
        """ Forget every earlier result so that a new runner starts with all checks unrun. """
        for check in self._checks:
            check.result = CheckResult.UNRUN
            check.counterexample = None
            check.details = {}
            check.last_run = 0.0
            check.over_bound = False
        self.failure = False

    def run_check(self, check: Check) -> CheckResult:
        """ Run a single check, update it with the result and return the result.

        :param Check check: The check to run
        :rtype: CheckResult
        """
        print("Running check: {}".format(check.name))
        self.interface.details = {}
        check.counterexample = None
        check.over_bound = False
        start = time.perf_counter()
        try:
            check.func(self.interface)
        except CheckSkipped as err:
            check.result = CheckResult.SKIPPED
            check.over_bound = err.over_bound
            self.interface.details["skipped"] = str(err)
        except CheckFailure as err:
            check.result = CheckResult.FAILED
            check.counterexample = str(err)
        except QuiverHeckeError as err:
            check.result = CheckResult.FAILED
            check.counterexample = "{}: {}".format(type(err).__name__, err)
        else:
            check.result = CheckResult.SUCCESS
        check.last_run = time.perf_counter() - start
        check.details = self.interface.details
        if check.result is CheckResult.FAILED:
            self.failure = True
            logger.warning("Check %s failed: %s", check.name, check.counterexample)
        elif check.result is CheckResult.SKIPPED:
            logger.info("Check %s skipped: %s", check.name, check.details["skipped"])
        else:
            logger.info("Check %s passed in %.3fs", check.name, check.last_run)
        return check.result

    def _run_by_predicate(self, predicate=lambda check: True):
        for check in self._checks:
            if predicate(check):
                self.run_check(check)

    def run(self, selection: Union[str, Iterable[str]] = "all") -> bool:
        """ Run the checks picked by ``selection`` and return whether any check has failed.

        A selector is ``all``, ``unrun``, ``failed``, a suite name or a check name.

        :raises: ConfigError for an unknown selector
        """
        selectors = [selection] if isinstance(selection, str) else list(selection)
        for name in selectors:
            if name == "all":
                self._run_by_predicate()
            elif name == "unrun":
                self._run_by_predicate(lambda check: check.result is CheckResult.UNRUN)
            elif name == "failed":
                self._run_by_predicate(lambda check: check.result is CheckResult.FAILED)
            elif name in self._checks.suites():
                self._run_by_predicate(lambda check: check.suite == name)
            elif self._checks.find_by_name(name) is not None:
                self.run_check(self._checks.find_by_name(name))
            else:
                raise ConfigError("There is no check or suite called {}".format(name))
        return self.failure

    def incomplete(self) -> List[Check]:
        """ Checks that were skipped because ``#𝕎`` exceeds the interface's ``max_group_order``. """
        return [check for check in self._checks if check.result is CheckResult.SKIPPED and check.over_bound]

    def first_failure(self):
        """ The first failed check in registration order, or ``None``. """
        for check in self._checks:
            if check.result is CheckResult.FAILED:
                return check
        return None

    def build_stats(self, checks: List[Check] = None) -> str:
        """ The aligned status table printed after a run.

        :param list[Check] checks: The checks to list, defaults to every collected check
        :rtype: str
        """
        checks = list(checks if checks is not None else self._checks)
        if not checks:
            return ""
        response = ""
        longest_name = max(len(check.name) for check in checks)
        for check in checks:
            response += check.name.rjust(longest_name) + " "
            if check.result is CheckResult.UNRUN:
                response += "⚫ Not run\n"
            elif check.result is CheckResult.SUCCESS:
                response += "✓ Passed\n"
            elif check.result is CheckResult.FAILED:
                response += "✘ Failed\n"
            elif check.result is CheckResult.SKIPPED:
                response += "➖ Skipped\n"
        return response

    def report(self):
        """ ``{config_echo, checks, timings}`` covering every check that has run. """
        ran = [check for check in self._checks if check.result is not CheckResult.UNRUN]
        entries = []
        for check in ran:
            entry = {"name": check.name, "status": STATUS_NAMES[check.result], "details": check.details}
            if check.counterexample is not None:
                entry["counterexample"] = check.counterexample
            entries.append(entry)
        return {
            "config_echo": self.config_echo,
            "checks": entries,
            "timings": {check.name: round(check.last_run, 6) for check in ran},
        }


