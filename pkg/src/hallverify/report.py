"""Report data model for the verification runner.

A report collects check results from up to three suites (shuffle,
formal, schemes) plus engine metadata, renders as text or JSON, and has
a single aggregate pass flag.  Timing values are reported but carry no
semantic weight; :func:`strip_timings` removes them so two reports from
identical configurations can be compared byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .schemes import VerificationResult

SCHEMA_VERSION = 1

TIMING_KEYS = frozenset({"seconds", "total_seconds"})


@dataclass
class CheckResult:
    """One named check outside the scheme catalog."""

    suite: str
    name: str
    passed: bool
    expected: str
    computed: str
    seconds: float
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "pass": self.passed,
            "expected": self.expected,
            "computed": self.computed,
            "seconds": round(self.seconds, 4),
            "note": self.note,
        }


@dataclass
class Report:
    """Everything one run produced."""

    kernel_convention: str
    seed: int
    suites: tuple[str, ...]
    config: dict = field(default_factory=dict)
    reflection_check: Optional[CheckResult] = None
    serre_results: list[CheckResult] = field(default_factory=list)
    exchange_results: list[CheckResult] = field(default_factory=list)
    formal_results: list[CheckResult] = field(default_factory=list)
    formal_trace: Optional[dict] = None
    scheme_results: list[VerificationResult] = field(default_factory=list)
    total_seconds: float = 0.0

    def all_checks(self) -> list:
        out: list = []
        if self.reflection_check is not None:
            out.append(self.reflection_check)
        out.extend(self.serre_results)
        out.extend(self.exchange_results)
        out.extend(self.formal_results)
        out.extend(self.scheme_results)
        return out

    @property
    def aggregate_pass(self) -> bool:
        return all(c.passed for c in self.all_checks())

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kernel_convention": self.kernel_convention,
            "seed": self.seed,
            "suites": list(self.suites),
            "config": self.config,
            "reflection_check": (self.reflection_check.to_dict()
                                 if self.reflection_check else None),
            "serre_results": [c.to_dict() for c in self.serre_results],
            "exchange_results": [c.to_dict() for c in self.exchange_results],
            "formal_results": [c.to_dict() for c in self.formal_results],
            "formal_trace": self.formal_trace,
            "scheme_results": [r.to_dict() for r in self.scheme_results],
            "aggregate_pass": self.aggregate_pass,
            "total_seconds": round(self.total_seconds, 4),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def render_text(self) -> str:
        lines = [
            f"kernel convention: {self.kernel_convention}",
            f"seed: {self.seed}",
            f"suites: {', '.join(self.suites) if self.suites else '(none)'}",
        ]
        for c in self.all_checks():
            if isinstance(c, VerificationResult):
                status = "PASS" if c.passed else "FAIL"
                line = (f"{status} schemes {c.scheme}.{c.check} "
                        f"expected={c.expected} computed={c.computed} "
                        f"({c.seconds:.2f}s)")
                if c.note:
                    line += f"  [{c.note}]"
            else:
                status = "PASS" if c.passed else "FAIL"
                line = (f"{status} {c.suite} {c.name} "
                        f"expected={c.expected} computed={c.computed} "
                        f"({c.seconds:.2f}s)")
                if c.note:
                    line += f"  [{c.note}]"
            lines.append(line)
        lines.append(f"aggregate: {'PASS' if self.aggregate_pass else 'FAIL'} "
                     f"({self.total_seconds:.1f}s, {len(self.all_checks())} checks)")
        return "\n".join(lines) + "\n"


def strip_timings(obj):
    """Recursively drop timing fields so reports can be compared exactly."""
    if isinstance(obj, dict):
        return {k: strip_timings(v) for k, v in obj.items()
                if k not in TIMING_KEYS}
    if isinstance(obj, list):
        return [strip_timings(v) for v in obj]
    return obj
