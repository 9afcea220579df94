"""Separation of recording tableaux, and how much of a word they pin down.

Two independent sequences get distinct recording tableaux as soon as their
growth sequences disagree, and the first disagreement step is exactly the
first step whose new cell differs.  Dually, a single observed recording
tableau determines a growing fraction of its source word; both effects are
measured here with full seed provenance.
"""

from __future__ import annotations

from typing import Sequence

from ..decoder import CandidateLimitError, decode
from ..stream import RskStream
from .report import ExperimentReport, verdict_of
from .runner import run_trials
from .source import BernoulliSource

__all__ = ["separation_time", "decoder_determination"]


def _separation_trial(payload: dict, trial: int) -> dict:
    p = payload["p"]
    horizon = payload["horizon"]
    k = len(p)
    source_a = BernoulliSource(p, (payload["seed"], trial, 0))
    source_b = BernoulliSource(p, (payload["seed"], trial, 1))
    letters_a = source_a.letters()
    letters_b = source_b.letters()
    stream_a = RskStream(k, record_cells=False, history_limit=0)
    stream_b = RskStream(k, record_cells=False, history_limit=0)
    for step in range(1, horizon + 1):
        event_a = stream_a.push(next(letters_a))
        event_b = stream_b.push(next(letters_b))
        if event_a.row_incremented != event_b.row_incremented:
            return {"trial": trial, "separated_at": step, "censored": False}
    return {"trial": trial, "separated_at": None, "censored": True}


def separation_time(
    *,
    p: Sequence[float],
    trials: int,
    horizon: int,
    seed: int,
    epsilon: float = 0.01,
    parallelism: int = 1,
) -> ExperimentReport:
    """First step at which two independent sequences' recording tableaux differ.

    Per pair, the first step whose new cell lands in different rows (while
    all earlier cells agreed, the shapes agree, so differing rows mean
    differing cells).  Passes when at most ``epsilon`` of the pairs are still
    unseparated at the horizon.
    """
    p = tuple(BernoulliSource(p, 0).p)
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    payload = {"p": p, "horizon": horizon, "seed": seed}
    results = run_trials(_separation_trial, payload, trials, parallelism)

    times = sorted(r["separated_at"] for r in results if not r["censored"])
    censored = sum(1 for r in results if r["censored"])
    fraction = censored / trials if trials else 0.0

    def quantile(q: float) -> int | None:
        if not times:
            return None
        return times[min(len(times) - 1, int(q * len(times)))]

    return ExperimentReport(
        experiment="separation_time",
        parameters={
            "p": list(p),
            "trials": trials,
            "horizon": horizon,
            "epsilon": epsilon,
            "seed": seed,
        },
        statistics={
            "rows": results,
            "censored": censored,
            "censored_fraction": fraction,
            "median": quantile(0.5),
            "q90": quantile(0.9),
            "q99": quantile(0.99),
            "max_observed": times[-1] if times else None,
        },
        verdict=verdict_of(True, fraction <= epsilon),
    )


def _determination_trial(payload: dict, trial: int) -> dict:
    p = payload["p"]
    n = payload["n"]
    k = len(p)
    source = BernoulliSource(p, (payload["seed"], trial, 0))
    letters = source.draw(n).tolist()
    stream = RskStream(k)
    for letter in letters:
        stream.push(letter)
    try:
        result = decode(stream.recording_tableau(), k, max_candidates=payload["max_candidates"])
    except CandidateLimitError as err:
        return {"trial": trial, "censored": True, "candidates": err.count}
    half = n // 2
    mismatches = sum(
        1
        for got, truth in zip(result.determined, letters)
        if got is not None and got != truth
    )
    determined_half = sum(1 for a in result.determined[:half] if a is not None)
    determined_all = sum(1 for a in result.determined if a is not None)
    return {
        "trial": trial,
        "censored": False,
        "candidates": result.candidate_count,
        "determined_half": determined_half,
        "half": half,
        "frac_half": determined_half / half if half else 1.0,
        "frac_all": determined_all / n if n else 1.0,
        "mismatches": mismatches,
    }


def decoder_determination(
    *,
    p: Sequence[float],
    words: int,
    n: int,
    seed: int,
    threshold_half: float,
    epsilon: float = 0.01,
    max_candidates: int = 10**6,
    parallelism: int = 1,
) -> ExperimentReport:
    """Decode the recording tableau of each sampled word and score determination.

    Exact invariant: every determined position must match the true letter.
    Statistical bound: pooled over words, the fraction of determined
    positions in the first half must reach ``threshold_half``, with at most
    ``epsilon`` of the words censored by the candidate cap.
    """
    p = tuple(BernoulliSource(p, 0).p)
    payload = {"p": p, "n": n, "seed": seed, "max_candidates": max_candidates}
    results = run_trials(_determination_trial, payload, words, parallelism)

    censored = sum(1 for r in results if r["censored"])
    scored = [r for r in results if not r["censored"]]
    total_half = sum(r["half"] for r in scored)
    pooled_half = (
        sum(r["determined_half"] for r in scored) / total_half if total_half else 1.0
    )
    mismatch_total = sum(r["mismatches"] for r in scored)
    failures = [
        {"trial": r["trial"], "invariant": "decoded-letter", "mismatches": r["mismatches"]}
        for r in scored
        if r["mismatches"]
    ]
    exact_ok = mismatch_total == 0
    statistical_ok = (
        pooled_half >= threshold_half and (censored / words if words else 0.0) <= epsilon
    )
    return ExperimentReport(
        experiment="decoder_determination",
        parameters={
            "p": list(p),
            "words": words,
            "n": n,
            "threshold_half": threshold_half,
            "epsilon": epsilon,
            "max_candidates": max_candidates,
            "seed": seed,
        },
        statistics={
            "rows": results,
            "censored": censored,
            "pooled_determined_half": pooled_half,
            "min_frac_half": min((r["frac_half"] for r in scored), default=None),
            "mean_candidates": (
                sum(r["candidates"] for r in scored) / len(scored) if scored else None
            ),
            "mismatch_total": mismatch_total,
        },
        verdict=verdict_of(exact_ok, statistical_ok),
        failures=failures,
    )
