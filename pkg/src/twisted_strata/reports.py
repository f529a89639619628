"""Pass/fail records shared by the checking operations and ``verify``."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    scope: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, scope: str, passed: bool, detail: str = "") -> CheckResult:
        result = CheckResult(name, scope, bool(passed), detail)
        self.checks.append(result)
        return result

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        bad = len(self.failures())
        verdict = "PASS" if bad == 0 else "FAIL"
        return f"{verdict}: {len(self.checks) - bad}/{len(self.checks)} checks passed"

    def to_text(self) -> str:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name} [{c.scope}]"
                 + (f": {c.detail}" if c.detail else "") for c in self.checks]
        lines.append(self.summary())
        return "\n".join(lines) + "\n"

    def to_data(self) -> dict:
        return {"passed": self.passed, "checks": [asdict(c) for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_data(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "scope", "pass", "detail"])
        for c in self.checks:
            writer.writerow([c.name, c.scope, int(c.passed), c.detail])
        return buf.getvalue()
