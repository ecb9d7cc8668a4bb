from __future__ import annotations

from dataclasses import dataclass, field

HOLDS = "holds"
FAILS = "fails"
VACUOUS = "vacuous"


@dataclass
class Check:
    name: str
    status: str
    witness: tuple | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != FAILS

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "witness": list(self.witness) if self.witness is not None else None,
            "detail": self.detail,
        }

    def line(self) -> str:
        out = f"{self.name}: {self.status}"
        if self.witness is not None:
            out += f" (witness {', '.join(map(str, self.witness))})"
        if self.detail:
            out += f" - {self.detail}"
        return out


@dataclass
class Report:
    """Ordered list of axiom verdicts; failures carry the first witness found."""

    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, status: str, witness=None, detail: str = "") -> Check:
        check = Check(name, status, tuple(witness) if witness is not None else None, detail)
        self.checks.append(check)
        return check

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.witness, c.detail))

    def to_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}

    def lines(self) -> list[str]:
        return [self.title] + ["  " + c.line() for c in self.checks]
