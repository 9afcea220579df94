"""Experiment reports with canonical serialization.

A report carries everything needed to reproduce the run (parameters and
seed), the collected statistics, and a three-way verdict: "pass" when all
exact invariants held and the statistical bounds were met, "inconclusive"
when only a statistical bound failed, "fail" when an exact invariant was
violated.  Serialization is canonical (sorted keys, fixed layout, no
timestamps) so identical runs yield byte-identical files.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from typing import IO

__all__ = ["ExperimentReport", "verdict_of", "SCHEMA_VERSION"]

SCHEMA_VERSION = 1

_EXIT_CODES = {"pass": 0, "fail": 2, "inconclusive": 3}


def verdict_of(exact_ok: bool, statistical_ok: bool) -> str:
    if not exact_ok:
        return "fail"
    return "pass" if statistical_ok else "inconclusive"


def _plain(value):
    """Coerce numpy scalars/arrays and tuples into plain JSON types."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        return value.item()
    return value


@dataclass
class ExperimentReport:
    experiment: str
    parameters: dict
    statistics: dict
    verdict: str
    failures: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self) -> None:
        if self.verdict not in _EXIT_CODES:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.verdict]

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "experiment": self.experiment,
            "parameters": _plain(self.parameters),
            "statistics": _plain(self.statistics),
            "verdict": self.verdict,
            "failures": _plain(self.failures),
            "warnings": _plain(self.warnings),
        }

    def to_json(self) -> str:
        """Canonical JSON text (byte-identical for identical runs)."""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def trial_rows(self) -> list[dict]:
        """Per-trial (or per-cell) tabular detail, when the experiment recorded it."""
        rows = self.statistics.get("rows", [])
        return [_plain(r) for r in rows]

    def write_trial_csv(self, stream: IO[str]) -> None:
        rows = self.trial_rows()
        if not rows:
            return
        writer = csv.DictWriter(stream, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
