"""First-row letter counts: hitting zero, and the dominating coupled walk.

For a letter L, the count of L in the first row moves up when L arrives,
down when a letter in [a, L) arrives while an L sits in the row (a being the
largest first-row entry below L), and stays put otherwise.  The count keeps
returning to zero; the second experiment checks the coupling that proves it:
a lazy walk driven by the same letters plus thinning coins that dominates
the count step for step until the walk itself first reaches zero.  Beyond
that point the walk continues into negative territory while the count stays
nonnegative, so the comparison window closes there; the walk keeps running
for the move-rate statistics.
"""

from __future__ import annotations

from typing import Sequence

from ..stream import RskStream
from .report import ExperimentReport, verdict_of
from .runner import run_trials
from .source import BernoulliSource, derive_rng

__all__ = ["first_row_vanishing", "coupled_walk_domination"]


def _check_letter(letter: int, k: int) -> None:
    if not 2 <= letter <= k:
        raise ValueError(f"letter must be in 2..{k}, got {letter}")


def _vanishing_trial(payload: dict, trial: int) -> dict:
    p = payload["p"]
    letter = payload["letter"]
    q = payload["q"]
    horizon = payload["horizon"]
    source = BernoulliSource(p, (payload["seed"], trial, 0))
    letters = source.letters()
    stream = RskStream(len(p), record_cells=False, history_limit=0)
    for _ in range(q):
        stream.push(next(letters))
    start_count = stream.m_count(letter)
    if start_count == 0:
        return {"trial": trial, "hit": q, "censored": False, "start_count": 0}
    for step in range(q + 1, horizon + 1):
        stream.push(next(letters))
        if stream.m_count(letter) == 0:
            return {"trial": trial, "hit": step, "censored": False, "start_count": start_count}
    return {"trial": trial, "hit": None, "censored": True, "start_count": start_count}


def first_row_vanishing(
    *,
    p: Sequence[float],
    letter: int,
    q: int,
    trials: int,
    horizon: int,
    seed: int,
    epsilon: float = 0.01,
    parallelism: int = 1,
) -> ExperimentReport:
    """Distribution of the first step >= q at which the first row holds no ``letter``."""
    p = tuple(BernoulliSource(p, 0).p)
    _check_letter(letter, len(p))
    if q < 0 or horizon < q:
        raise ValueError("need 0 <= q <= horizon")
    payload = {"p": p, "letter": letter, "q": q, "horizon": horizon, "seed": seed}
    results = run_trials(_vanishing_trial, payload, trials, parallelism)

    hits = sorted(r["hit"] for r in results if not r["censored"])
    censored = sum(1 for r in results if r["censored"])
    fraction = censored / trials if trials else 0.0

    def quantile(quant: float) -> int | None:
        if not hits:
            return None
        return hits[min(len(hits) - 1, int(quant * len(hits)))]

    return ExperimentReport(
        experiment="first_row_vanishing",
        parameters={
            "p": list(p),
            "letter": letter,
            "q": q,
            "trials": trials,
            "horizon": horizon,
            "epsilon": epsilon,
            "seed": seed,
        },
        statistics={
            "rows": results,
            "censored": censored,
            "censored_fraction": fraction,
            "immediate": sum(1 for r in results if r["start_count"] == 0),
            "median": quantile(0.5),
            "q90": quantile(0.9),
            "q99": quantile(0.99),
            "max_observed": hits[-1] if hits else None,
        },
        verdict=verdict_of(True, fraction <= epsilon),
    )


def _domination_run(payload: dict, run: int) -> dict:
    p = payload["p"]
    letter = payload["letter"]
    q = payload["q"]
    steps = payload["steps"]
    k = len(p)
    move_prob = p[letter - 1]  # == p[letter - 2] by precondition
    prefix_sums = [0.0] * (k + 1)
    for i, x in enumerate(p):
        prefix_sums[i + 1] = prefix_sums[i] + x

    source = BernoulliSource(p, (payload["seed"], run, 0))
    coins = derive_rng(payload["seed"], run, 1)
    letters = source.letters()
    stream = RskStream(k, record_cells=False, history_limit=0)
    for _ in range(q):
        stream.push(next(letters))
    m = stream.m_count(letter)
    walk = m
    start = m
    window_end = q if walk == 0 else None
    count_at_window_end = m if walk == 0 else None
    violations: list[dict] = []
    ups = downs = 0
    trace = []
    stride = max(1, steps // 10)
    for offset in range(1, steps + 1):
        step = q + offset
        below = stream.first_row_predecessor(letter)
        thinning_mass = prefix_sums[letter - 1] - prefix_sums[below - 1]
        x = next(letters)
        stream.push(x)
        if x == letter:
            walk += 1
            ups += 1
        elif below <= x < letter:
            if thinning_mass < move_prob - 1e-12:
                raise RuntimeError(
                    f"thinning mass {thinning_mass} below move probability {move_prob}"
                )
            if coins.random() < move_prob / thinning_mass:
                walk -= 1
                downs += 1
        m = stream.m_count(letter)
        if window_end is None:
            if m > walk:
                violations.append({"step": step, "count": m, "walk": walk})
            if walk == 0:
                window_end = step
                count_at_window_end = m
        if offset % stride == 0:
            trace.append({"step": step, "count": m, "walk": walk})
    return {
        "run": run,
        "start_count": start,
        "window_end": window_end,
        "count_at_window_end": count_at_window_end,
        "violations": violations,
        "walk_ups": ups,
        "walk_downs": downs,
        "final_count": m,
        "final_walk": walk,
        "trace": trace,
    }


def coupled_walk_domination(
    *,
    p: Sequence[float],
    letter: int,
    q: int,
    runs: int,
    steps: int,
    seed: int,
    rate_tolerance: float = 0.01,
    parallelism: int = 1,
) -> ExperimentReport:
    """Check the dominating walk pointwise and measure its move rates.

    Requires the letter's probability to equal its predecessor's (the lazy
    walk is built for that balanced case).  The walk starts at the first-row
    count after q letters and is updated on the same letter stream, with an
    independent thinning coin on down-opportunities; up and down moves then
    each occur with the common letter probability.  Exact invariant: the
    count never exceeds the walk before the walk's first return to zero, in
    any run.  Statistical bound: pooled move rates within ``rate_tolerance``
    of the letter probability.
    """
    p = tuple(BernoulliSource(p, 0).p)
    _check_letter(letter, len(p))
    if abs(p[letter - 1] - p[letter - 2]) > 1e-12:
        raise ValueError(
            "the coupling requires the letter and its predecessor to have equal "
            f"probabilities; got {p[letter - 2]} and {p[letter - 1]}"
        )
    payload = {"p": p, "letter": letter, "q": q, "steps": steps, "seed": seed}
    results = run_trials(_domination_run, payload, runs, parallelism)

    move_prob = p[letter - 1]
    total_steps = runs * steps
    up_rate = sum(r["walk_ups"] for r in results) / total_steps if total_steps else 0.0
    down_rate = sum(r["walk_downs"] for r in results) / total_steps if total_steps else 0.0
    violation_total = sum(len(r["violations"]) for r in results)
    zero_synchronised = all(
        r["count_at_window_end"] == 0 for r in results if r["window_end"] is not None
    )
    failures = [
        {"run": r["run"], "invariant": "domination", "violations": r["violations"]}
        for r in results
        if r["violations"]
    ]
    if not zero_synchronised:
        failures.append(
            {"invariant": "count-zero-at-walk-zero", "detail": "count positive when walk hit 0"}
        )
    exact_ok = violation_total == 0 and zero_synchronised
    rates_ok = (
        abs(up_rate - move_prob) <= rate_tolerance
        and abs(down_rate - move_prob) <= rate_tolerance
    )
    rows = [
        {
            "run": r["run"],
            "start_count": r["start_count"],
            "window_end": r["window_end"],
            "violations": len(r["violations"]),
            "walk_ups": r["walk_ups"],
            "walk_downs": r["walk_downs"],
        }
        for r in results
    ]
    return ExperimentReport(
        experiment="coupled_walk_domination",
        parameters={
            "p": list(p),
            "letter": letter,
            "q": q,
            "runs": runs,
            "steps": steps,
            "rate_tolerance": rate_tolerance,
            "seed": seed,
        },
        statistics={
            "rows": rows,
            "violation_total": violation_total,
            "up_rate": up_rate,
            "down_rate": down_rate,
            "move_probability": move_prob,
            "windows_closed": sum(1 for r in results if r["window_end"] is not None),
            "traces": [r["trace"] for r in results[:3]],
        },
        verdict=verdict_of(exact_ok, rates_ok),
        failures=failures,
    )
