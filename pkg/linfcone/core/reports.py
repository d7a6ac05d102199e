# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/reports.py
"""Diagnostic reports returned by every check, with blake3 fingerprints."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from blake3 import blake3

from .graded import GradedVector


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def fingerprint(payload: Any) -> str:
    """First 16 hex chars of blake3 over the canonical JSON of payload."""
    return blake3(canonical_json(payload).encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: Tuple[str, ...]
    residual: Any = None

    def to_dict(self) -> Dict[str, Any]:
        residual = self.residual
        if isinstance(residual, GradedVector):
            residual = residual.to_dict()
        return {"kind": self.kind, "witness": list(self.witness), "residual": residual}


@dataclass
class Report:
    check: str
    violations: List[Violation] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(
        self, kind: str, witness: Tuple[str, ...], residual: Optional[Any] = None
    ) -> None:
        self.violations.append(Violation(kind, tuple(witness), residual))

    def merge(self, other: "Report") -> "Report":
        return Report(
            self.check,
            self.violations + other.violations,
            self.checked + other.checked,
        )

    def kinds(self) -> List[str]:
        return sorted({v.kind for v in self.violations})

    def to_dict(self) -> Dict[str, Any]:
        body = {
            "check": self.check,
            "ok": self.ok,
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
        }
        body["digest"] = fingerprint(body)
        return body

    def __len__(self) -> int:
        return len(self.violations)
