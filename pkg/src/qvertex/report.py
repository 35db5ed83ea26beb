"""Outcome record for one verification suite."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class RelationReport:
    """Result of checking one operator/series identity over a parameter
    window.  ``witness`` holds a printable description of the first failure
    (empty when the suite passed)."""

    identity: str
    window: dict = field(default_factory=dict)
    passed: bool = True
    checks: int = 0
    witness: str = ""

    def record(self, ok, describe):
        """Count one check; on first failure, keep a witness string."""
        self.checks += 1
        if not ok and self.passed:
            self.passed = False
            self.witness = describe() if callable(describe) else str(describe)
        return ok

    def as_dict(self):
        return {
            "identity": self.identity,
            "window": self.window,
            "passed": self.passed,
            "checks": self.checks,
            "witness": self.witness,
        }
