"""Filter verdicts shared by every check."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Optional


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class FilterVerdict:
    """Outcome of one necessary-condition filter.

    ``certificate`` carries the evidence for a failure (the violated
    identity, the offending weight, ...) or the reason a filter was skipped.
    It is always JSON-serializable.
    """

    name: str
    status: Status
    certificate: Optional[dict] = None
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL

    @property
    def skipped(self) -> bool:
        return self.status is Status.SKIPPED

    def to_json(self) -> dict:
        out: dict[str, Any] = {"status": self.status.value}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.message:
            out["message"] = self.message
        return out


def ok(name: str, message: str = "", certificate: Optional[dict] = None) -> FilterVerdict:
    return FilterVerdict(name, Status.PASS, certificate, message)


def fail(name: str, certificate: dict, message: str = "") -> FilterVerdict:
    return FilterVerdict(name, Status.FAIL, certificate, message)


def skip(name: str, reason: str) -> FilterVerdict:
    return FilterVerdict(name, Status.SKIPPED, {"reason": reason}, reason)


class PreconditionUnmet(Exception):
    """Raised internally when a filter's hypotheses do not apply."""
