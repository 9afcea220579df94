"""Row growth frequencies: each row's share of the shape approaches the
corresponding letter probability, and the row count never exceeds the
alphabet size."""

from __future__ import annotations

from typing import Sequence

from ..stream import RskStream
from .report import ExperimentReport, verdict_of
from .runner import run_trials
from .source import BernoulliSource

__all__ = ["thoma_frequencies"]


def _growth_trial(payload: dict, trial: int) -> dict:
    p = payload["p"]
    n = payload["n"]
    source = BernoulliSource(p, (payload["seed"], trial, 0))
    stream = RskStream(len(p), record_cells=False, history_limit=0)
    block = 8192
    remaining = n
    while remaining > 0:
        for letter in source.draw(min(block, remaining)).tolist():
            stream.push(letter)
        remaining -= min(block, remaining)
    coordinate = stream.weyl_coordinate()
    return {
        "trial": trial,
        "row_fractions": [length / n for length in coordinate],
        "rows_used": len(stream.shape),
    }


def thoma_frequencies(
    *,
    p: Sequence[float],
    n: int,
    trials: int,
    seed: int,
    tolerance: float = 0.02,
    parallelism: int = 1,
    allow_unsorted: bool = False,
) -> ExperimentReport:
    """Mean and spread of row-length fractions after ``n`` letters.

    Passes when each row's mean fraction is within ``tolerance`` of the
    matching letter probability; fails (exactly) if any trial ever uses more
    rows than the alphabet has letters.
    """
    p = tuple(BernoulliSource(p, 0, allow_unsorted=allow_unsorted).p)
    if n < 1 or trials < 1:
        raise ValueError("n and trials must be positive")
    payload = {"p": p, "n": n, "seed": seed}
    results = run_trials(_growth_trial, payload, trials, parallelism)

    k = len(p)
    means = [sum(r["row_fractions"][i] for r in results) / trials for i in range(k)]
    spreads = [
        max(r["row_fractions"][i] for r in results)
        - min(r["row_fractions"][i] for r in results)
        for i in range(k)
    ]
    deviations = [abs(means[i] - p[i]) for i in range(k)]
    rows_ok = all(r["rows_used"] <= k for r in results)
    within = all(d <= tolerance for d in deviations)

    rows = [
        {
            "trial": r["trial"],
            **{f"row{i + 1}_fraction": r["row_fractions"][i] for i in range(k)},
            "rows_used": r["rows_used"],
        }
        for r in results
    ]
    failures = [
        {"trial": r["trial"], "invariant": "row-count", "rows_used": r["rows_used"]}
        for r in results
        if r["rows_used"] > k
    ]
    warnings = [] if not allow_unsorted else ["probability vector accepted unsorted"]
    return ExperimentReport(
        experiment="thoma_frequencies",
        parameters={"p": list(p), "n": n, "trials": trials, "tolerance": tolerance, "seed": seed},
        statistics={
            "rows": rows,
            "mean_row_fractions": means,
            "spread_row_fractions": spreads,
            "mean_abs_deviation": deviations,
            "max_rows_used": max((r["rows_used"] for r in results), default=0),
        },
        verdict=verdict_of(rows_ok, within),
        failures=failures,
        warnings=warnings,
    )
