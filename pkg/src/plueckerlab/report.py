"""Verification reports: a list of checked claims plus the parameters used."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

# where an expected value comes from
PUBLISHED = "published"   # a value stated in the source publication
DERIVED = "derived"       # computed by an independent method
TRIVIAL = "trivial"       # follows from the definitions
SOURCES = (PUBLISHED, DERIVED, TRIVIAL)


def _plain(x):
    """JSON-friendly rendering that keeps exact values readable."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


@dataclass
class Claim:
    text: str
    expected: object
    computed: object
    passed: bool
    source: str
    counterexample: str | None = None

    def to_dict(self) -> dict:
        d = {
            "claim": self.text,
            "expected": _plain(self.expected),
            "computed": _plain(self.computed),
            "pass": self.passed,
            "source": self.source,
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


@dataclass
class VerificationReport:
    check: str
    parameters: dict
    version: str
    claims: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def add(self, text: str, expected, computed, source: str, passed: bool | None = None,
            counterexample=None) -> Claim:
        if source not in SOURCES:
            raise ValueError(f"unknown source {source!r}")
        if passed is None:
            passed = expected == computed
        c = Claim(text, expected, computed, bool(passed), source,
                  None if counterexample is None else str(counterexample))
        self.claims.append(c)
        return c

    def note(self, text: str):
        self.notes.append(text)

    @property
    def passed(self) -> bool:
        return bool(self.claims) and all(c.passed for c in self.claims)

    def failures(self) -> list:
        return [c for c in self.claims if not c.passed]

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "check": self.check,
            "version": self.version,
            "parameters": _plain(self.parameters),
            "pass": self.passed,
            "claims": [c.to_dict() for c in self.claims],
            "notes": list(self.notes),
        }
        if timings:
            d["timings"] = {k: round(v, 3) for k, v in self.timings.items()}
        return d

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=False)

    def to_text(self, timings: bool = False) -> str:
        lines = [f"{self.check}  (plueckerlab {self.version})"]
        for k, v in self.parameters.items():
            lines.append(f"  {k}: {_plain(v)}")
        for c in self.claims:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"[{mark}] {c.text}  expected={_plain(c.expected)} "
                         f"computed={_plain(c.computed)} ({c.source})")
            if c.counterexample is not None:
                lines.append(f"       counterexample: {c.counterexample}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        if timings:
            for k, v in self.timings.items():
                lines.append(f"  time {k}: {v:.3f}s")
        lines.append("OVERALL: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)
