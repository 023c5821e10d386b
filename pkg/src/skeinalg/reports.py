"""Report types shared by the positivity scans and certifications."""

from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import Laurent

__all__ = [
    "VERDICT_POSITIVE",
    "VERDICT_VIOLATION",
    "Witness",
    "PositivityReport",
]

VERDICT_POSITIVE = "certified-positive-up-to-bound"
VERDICT_VIOLATION = "violation"


@dataclass(frozen=True)
class Witness:
    """One offending structure constant: which product, which label, which
    coefficient."""

    inputs: tuple[str, ...]
    label: str
    coeff: Laurent
    note: str = ""

    def to_json_obj(self) -> dict:
        obj = {
            "inputs": list(self.inputs),
            "label": self.label,
            "coeff": self.coeff.to_json_obj(),
        }
        if self.note:
            obj["note"] = self.note
        return obj


@dataclass
class PositivityReport:
    surface: str
    sequence: str
    bound: int
    verdict: str
    witnesses: list[Witness] = field(default_factory=list)
    q1: bool = False

    @property
    def passed(self) -> bool:
        return self.verdict == VERDICT_POSITIVE

    def first_witness(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None

    def to_json_obj(self) -> dict:
        return {
            "surface": self.surface,
            "sequence": self.sequence,
            "bound": self.bound,
            "q1": self.q1,
            "verdict": self.verdict,
            "witnesses": [w.to_json_obj() for w in self.witnesses],
        }
