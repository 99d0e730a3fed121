"""Outcome of a single property check."""

from __future__ import annotations

from dataclasses import dataclass, field

HOLDS = "holds-on-instance"
COUNTEREXAMPLE = "counterexample"


@dataclass
class PropertyReport:
    property: str
    semantics: str
    verdict: str
    witness: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def __str__(self):
        return f"{self.property}/{self.semantics}: {self.verdict}"
