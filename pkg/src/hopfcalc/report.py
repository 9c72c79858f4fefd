"""Pass/fail reports shared by all checkers and verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SuiteCase:
    name: str
    lhs: str
    rhs: str
    passed: bool


@dataclass
class SuiteReport:
    suite: str
    cases: list[SuiteCase] = field(default_factory=list)
    elapsed: float = 0.0

    def record(self, name: str, lhs, rhs, passed: bool) -> None:
        self.cases.append(SuiteCase(name, str(lhs), str(rhs), passed))

    def check(self, name: str, lhs, rhs) -> bool:
        ok = lhs == rhs
        self.record(name, lhs, rhs, ok)
        return ok

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def n_cases(self) -> int:
        return len(self.cases)

    @property
    def n_passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    def failures(self) -> list[SuiteCase]:
        return [c for c in self.cases if not c.passed]

    def to_lines(self):
        """Machine-readable
        ``suite<TAB>case<TAB>PASS|FAIL<TAB>lhs<TAB>rhs`` records."""
        for c in self.cases:
            status = "PASS" if c.passed else "FAIL"
            yield f"{self.suite}\t{c.name}\t{status}\t{c.lhs}\t{c.rhs}"

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"suite {self.suite}: {self.n_passed}/{self.n_cases} cases {status}"

    def __str__(self) -> str:
        return self.summary()
