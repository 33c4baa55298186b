"""A tiny pass/fail report shared by the verification drivers."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["CheckReport"]


@dataclass
class CheckReport:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    seed: int | None = None
    max_witnesses: int = 20

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed

    def record(self, ok: bool, witness: str) -> None:
        self.checks += 1
        if not ok and len(self.failures) < self.max_witnesses:
            self.failures.append(witness)

    def merge(self, other: "CheckReport") -> None:
        self.checks += other.checks
        for w in other.failures:
            if len(self.failures) < self.max_witnesses:
                self.failures.append(f"{other.name}: {w}")

    def lines(self) -> list[str]:
        status = "PASS" if self.passed else "FAIL"
        head = f"{self.name}: {status} ({self.checks} checks"
        head += f", seed={self.seed})" if self.seed is not None else ")"
        return [head] + [f"  witness: {w}" for w in self.failures]
