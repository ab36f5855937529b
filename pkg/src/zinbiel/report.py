"""Structured text reports shared by the verification commands.

Layout::

    report: <title>
    note: <free text>
    check <name>: expected=<value> computed=<value> PASS|FAIL
    result: PASS|FAIL

The JSON form mirrors the same fields in a flat object.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any
    passed: bool

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    _lines: list[tuple[str, Any]] = field(default_factory=list, repr=False)

    def check(self, name: str, expected: Any, computed: Any, passed: bool | None = None) -> bool:
        ok = (expected == computed) if passed is None else passed
        c = Check(name, expected, computed, bool(ok))
        self.checks.append(c)
        self._lines.append(("check", c))
        return c.passed

    def note(self, text: str) -> None:
        self.notes.append(text)
        self._lines.append(("note", text))

    def extend(self, other: "Report", prefix: str = "") -> None:
        for kind, item in other._lines:
            if kind == "check":
                self.check(prefix + item.name, item.expected, item.computed, item.passed)
            else:
                self.note(item)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        out = [f"report: {self.title}"]
        for kind, item in self._lines:
            if kind == "note":
                lines = str(item).splitlines() or [""]
                out.append(f"note: {lines[0]}")
                out.extend(f"  {line}" for line in lines[1:])
            else:
                out.append(
                    f"check {item.name}: expected={_fmt(item.expected)} "
                    f"computed={_fmt(item.computed)} {item.status}"
                )
        out.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(out)

    def to_json(self) -> str:
        return json.dumps(
            {
                "title": self.title,
                "notes": self.notes,
                "checks": [
                    {
                        "name": c.name,
                        "expected": _fmt(c.expected),
                        "computed": _fmt(c.computed),
                        "status": c.status,
                    }
                    for c in self.checks
                ],
                "result": "PASS" if self.passed else "FAIL",
            },
            indent=2,
        )


def _fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
