"""Empirical transition kernel of the row-length-difference walk (two letters).

For balanced binary input, the difference j between the two row lengths moves
as a Markov chain: up with probability (j+2)/(2(j+1)), down with probability
j/(2(j+1)).  The walk is transient, so a single long run visits each low
level only a handful of times; to collect real statistics at small j, the
step budget is split into fresh fixed-length episodes and transitions are
pooled by level, which the Markov property makes unbiased.
"""

from __future__ import annotations

from math import sqrt
from typing import Sequence

from ..stream import RskStream
from .report import ExperimentReport, verdict_of
from .source import BernoulliSource

__all__ = ["transition_stats", "expected_up_probability"]


def expected_up_probability(j: int) -> float:
    return (j + 2) / (2 * (j + 1))


def transition_stats(
    *,
    p: Sequence[float],
    steps: int,
    seed: int,
    episode_length: int = 200,
    max_j: int = 10,
    min_visits: int = 1000,
    tolerance: float = 0.01,
    parallelism: int = 1,
) -> ExperimentReport:
    """Measure up-move frequencies by level and compare with the exact kernel.

    Only the balanced two-letter distribution is accepted: the reference
    formula holds for that case and nothing else.  ``tolerance`` is a floor;
    each judged cell actually gets max(3 binomial sigma, tolerance).
    Cells below ``min_visits`` or above ``max_j`` are reported but not judged.
    """
    p = tuple(float(x) for x in p)
    if len(p) != 2 or abs(p[0] - 0.5) > 1e-12 or abs(p[1] - 0.5) > 1e-12:
        raise ValueError(
            f"the reference kernel is only valid for p=(1/2, 1/2); got {p}"
        )
    if steps < 1 or episode_length < 1:
        raise ValueError("steps and episode_length must be positive")
    del parallelism  # single stream; nothing to farm out

    source = BernoulliSource(p, (seed, 0, 0))
    visits: dict[int, int] = {}
    ups: dict[int, int] = {}
    remaining = steps
    letter_iter = source.letters()
    while remaining > 0:
        length = min(episode_length, remaining)
        remaining -= length
        stream = RskStream(2, record_cells=False, history_limit=0)
        j = 0
        for _ in range(length):
            event = stream.push(next(letter_iter))
            up = event.row_incremented == 1
            visits[j] = visits.get(j, 0) + 1
            if up:
                ups[j] = ups.get(j, 0) + 1
                j += 1
            else:
                j -= 1

    rows = []
    wall_ok = True
    cells_ok = True
    for j in sorted(visits):
        n_j = visits[j]
        up_freq = ups.get(j, 0) / n_j
        expected = expected_up_probability(j)
        half_width = max(3 * sqrt(expected * (1 - expected) / n_j), tolerance)
        judged = j <= max_j and n_j >= min_visits
        ok = abs(up_freq - expected) <= half_width
        strict_ok = abs(up_freq - expected) <= tolerance
        rows.append(
            {
                "j": j,
                "visits": n_j,
                "ups": ups.get(j, 0),
                "up_freq": up_freq,
                "expected": expected,
                "abs_error": abs(up_freq - expected),
                "judged": judged,
                "ok": ok if judged else None,
                "within_floor": strict_ok if judged else None,
            }
        )
        if judged and not ok:
            cells_ok = False
    if visits.get(0, 0) and ups.get(0, 0) != visits[0]:
        wall_ok = False

    judged_rows = [r for r in rows if r["judged"]]
    statistics = {
        "rows": rows,
        "judged_cells": len(judged_rows),
        "max_abs_error_judged": max((r["abs_error"] for r in judged_rows), default=0.0),
        "all_judged_within_floor": all(r["within_floor"] for r in judged_rows),
        "wall_visits": visits.get(0, 0),
        "wall_always_up": wall_ok,
        "episodes": -(-steps // episode_length),
    }
    failures = []
    if not wall_ok:
        failures.append(
            {"invariant": "up-from-zero", "detail": "observed a down move from j=0"}
        )
    return ExperimentReport(
        experiment="transition_stats",
        parameters={
            "p": list(p),
            "steps": steps,
            "episode_length": episode_length,
            "max_j": max_j,
            "min_visits": min_visits,
            "tolerance": tolerance,
            "seed": seed,
        },
        statistics=statistics,
        verdict=verdict_of(wall_ok, cells_ok),
        failures=failures,
    )
