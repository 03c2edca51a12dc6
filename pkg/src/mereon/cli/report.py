import json
from typing import List, Optional

from pydantic import BaseModel, ConfigDict


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    expected: str
    actual: str
    exact: bool = True


class VerifyReport(BaseModel):
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        return next((check for check in self.checks if not check.passed), None)

    def to_json(self) -> str:
        payload = {"passed": self.passed, "checks": [check.model_dump() for check in self.checks]}
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"

    def to_markdown(self) -> str:
        lines = [
            "# Verification report",
            "",
            f"Result: {'PASS' if self.passed else 'FAIL'} ({sum(c.passed for c in self.checks)}/{len(self.checks)})",
            "",
            "| Check | Status | Expected | Actual | Exact |",
            "|---|---|---|---|---|",
        ]
        for check in self.checks:
            status = "pass" if check.passed else "FAIL"
            exact = "yes" if check.exact else "no"
            lines.append(f"| {check.name} | {status} | {_cell(check.expected)} | {_cell(check.actual)} | {exact} |")
        return "\n".join(lines) + "\n"


def _cell(text: str) -> str:
    return text.replace("|", "\\|").replace("\n", " ")
