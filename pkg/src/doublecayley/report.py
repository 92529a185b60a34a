"""Verification reports: named checks with expected/actual values."""

import json
import time
from dataclasses import dataclass, field


def _text(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_text(v) for v in value) + "]"
    return str(value)


@dataclass
class Check:
    name: str
    expected: object
    actual: object
    passed: bool = None
    note: str = ""

    def __post_init__(self):
        if self.passed is None:
            self.passed = self.expected == self.actual

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def as_dict(self):
        d = {"name": self.name, "expected": _text(self.expected),
             "actual": _text(self.actual), "status": self.status}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    def add(self, name, expected, actual, passed=None, note=""):
        c = Check(name, expected, actual, passed, note)
        self.checks.append(c)
        return c

    def guard(self, name, expected, thunk, note=""):
        """Record a check whose computation may raise."""
        try:
            actual = thunk()
        except Exception as exc:  # a crashing check is a failing check
            return self.add(name, expected, f"error: {type(exc).__name__}: {exc}", False, note)
        return self.add(name, expected, actual, note=note)

    def extend(self, other, prefix=True):
        for c in other.checks:
            name = f"{other.suite}: {c.name}" if prefix else c.name
            self.checks.append(Check(name, c.expected, c.actual, c.passed, c.note))
        self.seconds += other.seconds

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def as_dict(self):
        # timing is left out so that reruns are byte-identical
        return {"suite": self.suite, "checks": [c.as_dict() for c in self.checks],
                "status": self.status}

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, sort_keys=False) + "\n"

    def to_text(self, quiet=False):
        lines = []
        for c in self.checks:
            if quiet and c.passed:
                continue
            line = f"[{c.status.upper()}] {c.name}: expected {_text(c.expected)}, got {_text(c.actual)}"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
        n_fail = len(self.failures())
        lines.append(f"{self.suite}: {len(self.checks) - n_fail}/{len(self.checks)} checks passed"
                     f" in {self.seconds:.2f}s -> {self.status.upper()}")
        return "\n".join(lines) + "\n"


class timed:
    def __init__(self, report):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.seconds += time.perf_counter() - self.start
        return False
