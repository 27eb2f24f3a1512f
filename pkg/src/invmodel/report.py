"""Check records shared by the verification suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class Check:
    name: str
    passed: bool
    observed: object
    expected: object
    elapsed_ms: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self, timings: bool = False) -> dict:
        d = {
            "name": self.name,
            "status": self.status,
            "observed": self.observed,
            "expected": self.expected,
        }
        if timings:
            d["elapsed_ms"] = round(self.elapsed_ms, 1)
        return d
