"""Structured reports with stable JSON serialization.

A report names a structure (plus a content hash of its tables), carries
classification flags, battery outcomes and witnesses, and ends in one of
four verdicts.  Sampled evidence is never allowed to claim proved-pass.
Serialization sorts keys and omits timing by default so identical runs
produce identical bytes.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Verdict(str, Enum):
    PROVED_PASS = "proved-pass"
    SAMPLED_PASS = "sampled-pass"
    FAIL = "fail"
    SKIPPED = "skipped"


def content_hash(payload: Any) -> str:
    """Stable short hash of any JSON-serializable payload."""
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class Report:
    """One verified claim about one structure."""

    name: str
    structure_hash: str
    verdict: Verdict
    flags: dict[str, bool] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)
    timing: float | None = None

    def __post_init__(self):
        if self.verdict is Verdict.FAIL and not self.witnesses:
            raise ValueError("a fail verdict must carry at least one witness")

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        out = {
            "name": self.name,
            "structure_hash": self.structure_hash,
            "verdict": self.verdict.value,
            "flags": dict(sorted(self.flags.items())),
            "details": _plain(self.details),
            "witnesses": _plain(self.witnesses),
        }
        if include_timing and self.timing is not None:
            out["timing_seconds"] = round(self.timing, 6)
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Report":
        return cls(
            name=data["name"],
            structure_hash=data["structure_hash"],
            verdict=Verdict(data["verdict"]),
            flags=dict(data.get("flags", {})),
            details=data.get("details", {}),
            witnesses=data.get("witnesses", {}),
            timing=data.get("timing_seconds"),
        )

    @classmethod
    def from_json(cls, blob: str) -> "Report":
        return cls.from_dict(json.loads(blob))


def _plain(value: Any) -> Any:
    """Recursively coerce values into JSON-clean primitives."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if hasattr(value, "indices"):
        return list(value.indices())
    return str(value)


def worst(verdicts) -> Verdict:
    """Aggregate verdicts: any fail dominates, then sampled, then skipped."""
    vs = list(verdicts)
    if any(v is Verdict.FAIL for v in vs):
        return Verdict.FAIL
    if any(v is Verdict.SAMPLED_PASS for v in vs):
        return Verdict.SAMPLED_PASS
    if vs and all(v is Verdict.SKIPPED for v in vs):
        return Verdict.SKIPPED
    return Verdict.PROVED_PASS
