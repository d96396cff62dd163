from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

from ..util.io import write_json


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single quantitative check.

    Parameters
    ----------
    name
        Identifier of the check, e.g. ``"lemma8.mean_U"``.
    value
        Measured value.
    bound
        Threshold the value is compared against, ``None`` for checks that
        only record a value.
    passed
        Whether the check holds.
    detail
        Human readable description, e.g. the offending time of a failure.
    """

    name: str
    value: float
    bound: float | None
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict[str, object]:
        return asdict(self)

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        bound = "" if self.bound is None else f" (bound {self.bound:.10g})"
        detail = f" {self.detail}" if self.detail else ""
        return f"[{status}] {self.name}: {self.value:.10g}{bound}{detail}"


def upper_check(name: str, value: float, bound: float, detail: str = "") -> CheckResult:
    """Passes when ``value < bound``."""
    return CheckResult(name, float(value), float(bound), bool(value < bound), detail)


def lower_check(name: str, value: float, bound: float, detail: str = "") -> CheckResult:
    """Passes when ``value > bound``."""
    return CheckResult(name, float(value), float(bound), bool(value > bound), detail)


def record(name: str, value: float, detail: str = "") -> CheckResult:
    """A value reported without a pass threshold."""
    return CheckResult(name, float(value), None, True, detail)


@dataclass
class VerificationReport:
    """Ordered collection of checks. It passes iff every check passes."""

    checks: list[CheckResult] = field(default_factory=list)
    info: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, check: CheckResult) -> None:
        if not isinstance(check, CheckResult):
            raise TypeError(
                f"'check' must be a CheckResult, but {type(check)} was given."
            )
        self.checks.append(check)
        return

    def extend(self, checks: Iterable[CheckResult]) -> None:
        for check in checks:
            self.add(check)
        return

    def merge(self, other: VerificationReport, prefix: str = "") -> None:
        for check in other:
            self.add(replace(check, name=f"{prefix}{check.name}"))
        self.info.update({f"{prefix}{k}": v for k, v in other.info.items()})
        return

    def failed(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def __getitem__(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(f"There is no check named '{name}'.")

    def __contains__(self, name: str) -> bool:
        return any(check.name == name for check in self.checks)

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def summary(self) -> str:
        lines = [str(check) for check in self.checks]
        lines.append(f"{len(self) - len(self.failed())}/{len(self)} checks passed")
        return "\n".join(lines)

    def to_dict(self) -> dict[str, object]:
        return {
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
            "info": dict(self.info),
        }

    def to_json(self, filename: str | Path) -> None:
        write_json(self.to_dict(), filename)
        return
