"""Check results and the JSON report written by every command."""

from __future__ import annotations

import json

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable

from rich.table import Table

from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    """Outcome of one verified identity or property.

    Args:
        name: what was checked, e.g. ``braid`` or ``C3``
        status: one of ``pass``, ``fail`` or ``skip``
        instance: parameters of this instance (indices, shapes, tableaux)
        witness: JSON-safe counterexample data for failures
        axiom: set for checks that belong to an axiom family (cellular, seminormal)
    """

    name: str
    status: str = PASS
    instance: dict | None = None
    witness: Any = None
    axiom: str | None = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    @classmethod
    def of(cls, name: str, ok: bool, instance: dict | None = None, witness: Any = None,
           axiom: str | None = None) -> "Check":
        return cls(name, PASS if ok else FAIL, instance, None if ok else witness, axiom)

    @classmethod
    def skipped(cls, name: str, reason: str, instance: dict | None = None) -> "Check":
        return cls(name, SKIP, instance, reason)

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "status": self.status}
        if self.axiom is not None:
            out["axiom"] = self.axiom
        if self.instance:
            out["instance"] = self.instance
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def summarize(checks: Iterable[Check]) -> dict[str, int]:
    counts = {PASS: 0, FAIL: 0, SKIP: 0}
    for check in checks:
        counts[check.status] += 1
    return counts


@dataclass
class Report:
    """Everything a command produced: parameters, checks, timing and payload."""

    command: str
    params: dict
    checks: list[Check] = field(default_factory=list)
    timing: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    def extend(self, checks: Iterable[Check]) -> None:
        for check in checks:
            self.checks.append(check)
            if check.status == FAIL:
                log.error(f"[{self.command}] {check.name} failed: {check.instance} {check.witness}")
            elif check.status == SKIP:
                log.warning(f"[{self.command}] {check.name} skipped: {check.witness}")

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "params": self.params,
            "checks": [check.to_json() for check in self.checks],
            "timing": round(self.timing, 3),
        }
        if self.extra:
            out["extra"] = self.extra
        return out

    def save(self, path: str | Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_json(), indent=2))
        log.info(f"Report saved to {path}")

    def table(self) -> Table:
        """Rich table with one row per check name, aggregated over instances."""
        table = Table(title=f"{self.command}  ({self.timing:.2f}s)")
        table.add_column("check")
        table.add_column("pass", justify="right", style="green")
        table.add_column("fail", justify="right", style="red")
        table.add_column("skip", justify="right", style="yellow")
        groups: dict[str, list[Check]] = {}
        for check in self.checks:
            groups.setdefault(check.name, []).append(check)
        for name, checks in groups.items():
            counts = summarize(checks)
            table.add_row(name, str(counts[PASS]), str(counts[FAIL]), str(counts[SKIP]))
        return table
