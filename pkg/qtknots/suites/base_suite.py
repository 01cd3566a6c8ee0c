"""
Base Suite Class for qtknots

This module defines the abstract base class that all verification suites must implement.
"""

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Iterable, List, Tuple

from ..console import progress
from ..errors import ArithmeticInconsistencyError, QtKnotsError

logger = logging.getLogger(__name__)

CheckOutcome = Tuple[bool, str]
Check = Tuple[str, Callable[[], CheckOutcome]]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    gating: bool = True
    elapsed: float = 0.0
    detail: str = ""

    @property
    def status(self) -> str:
        if not self.gating:
            return "NOTE"
        return "PASS" if self.passed else "FAIL"

    def summary_line(self) -> str:
        """One machine-readable line: STATUS suite/check gating=yes elapsed=0.12s detail=..."""
        gating = "yes" if self.gating else "no"
        holds = "" if self.gating else f" holds={'yes' if self.passed else 'no'}"
        detail = self.detail.replace("\n", " ")
        return f"{self.status} {self.suite}/{self.name} gating={gating}{holds} elapsed={self.elapsed:.2f}s detail={detail}"

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "check": self.name,
            "status": self.status,
            "passed": self.passed,
            "gating": self.gating,
            "elapsed": round(self.elapsed, 3),
            "detail": self.detail,
        }


def compare(got, expected, what: str) -> CheckOutcome:
    """Exact comparison with a short detail string."""
    if got == expected:
        return True, f"{what} ok"
    return False, f"{what}: got {got}, expected {expected}"


class VerificationSuite(ABC):
    """
    Abstract base class for verification suites.

    A suite is a named list of checks. Gating suites decide the exit status of
    ``verify``; reported suites record observations and never fail a run.
    """

    gating = True
    description = ""

    def __init__(self, name="Base Suite", **kwargs):
        """
        Initialize the suite with a name and optional configuration.

        Args:
            name: Name of the suite, as used on the command line
            **kwargs: Suite options (see SUITE_CONFIG.md)
        """
        self.name = name
        self.config = kwargs
        self.stats = {
            "suite_name": self.name,
            "checks_run": 0,
            "checks_failed": 0,
            "elapsed": 0.0,
        }

    @abstractmethod
    def checks(self) -> Iterable[Check]:
        """
        The checks of this suite.

        Returns:
            Iterable of (check name, callable returning (passed, detail))
        """
        pass

    def run_check(self, name: str, fn: Callable[[], CheckOutcome]) -> CheckResult:
        start = time.perf_counter()
        try:
            passed, detail = fn()
        except ArithmeticInconsistencyError:
            if self.gating:
                raise
            logger.exception("reported scan %s/%s hit an arithmetic inconsistency", self.name, name)
            passed, detail = False, "arithmetic inconsistency (see log)"
        except QtKnotsError as e:
            passed, detail = False, f"{type(e).__name__}: {e}"
        elapsed = time.perf_counter() - start
        logger.debug("%s/%s: %s in %.2fs", self.name, name, "pass" if passed else "fail", elapsed)
        return CheckResult(self.name, name, bool(passed), self.gating, elapsed, detail)

    def run(self, show_progress: bool = False) -> List[CheckResult]:
        """Run every check in order and update the suite statistics."""
        results = []
        checks = list(self.checks())
        for name, fn in progress(checks, desc=self.name, enabled=show_progress):
            result = self.run_check(name, fn)
            results.append(result)
            self.stats["checks_run"] += 1
            self.stats["elapsed"] += result.elapsed
            if self.gating and not result.passed:
                self.stats["checks_failed"] += 1
        return results

    def get_stats(self):
        """Get the current statistics."""
        return self.stats
