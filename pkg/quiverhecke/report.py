"""
The report record returned by every ``*_check`` operation.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class CheckReport:
    """ Outcome of a report-producing computation.

    :param str name: Short identifier of the computation.
    :param dict details: Summary values (counts, sizes, skipped flags).
    :param list violations: One entry per failing instance, already JSON-friendly.
    """

    name: str
    details: Dict[str, Any] = field(default_factory=dict)
    violations: List[Any] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, violation):
        self.violations.append(violation)

    def to_json(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "details": self.details,
            "violations": self.violations,
        }
