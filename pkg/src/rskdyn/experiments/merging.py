"""Coupled insertion of a word and a rearranged copy until the tableaux merge.

Two words that differ by rearranging their first n letters share everything
afterwards; feeding both the same continuation makes their insertion
tableaux collide in finite time.  The experiments track the difference
between the two tableaux as per-row multiset deltas, updated in O(1) per
step from each insertion's bump chain, so merge detection never rescans the
tableaux.

For an adjacent swap, the difference has a rigid structure until the first
rows merge: the ascending copy's first row holds exactly one extra value,
and that value never decreases as it gets exchanged upward.  Both facts are
asserted at every pre-merge step.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

from ..stream import RskStream
from .report import ExperimentReport, verdict_of
from .runner import run_trials
from .source import BernoulliSource, derive_rng

__all__ = ["transposition_coupling", "de_finetti_merge"]


class _PairedStreams:
    """Two insertion streams on shared letters, tracked by per-row deltas."""

    def __init__(self, k: int):
        self.k = k
        self.first = RskStream(k, record_cells=False, history_limit=0)
        self.second = RskStream(k, record_cells=False, history_limit=0)
        self.deltas: list[Counter] = [Counter() for _ in range(k)]
        self._synced = False

    def feed_distinct(self, a: int, b: int) -> None:
        self.first.push(a)
        self.second.push(b)

    def sync_deltas(self) -> None:
        """Compute row deltas from scratch (after feeding distinct letters)."""
        rows_a = self.first._rows
        rows_b = self.second._rows
        for r in range(self.k):
            delta = Counter(rows_a[r] if r < len(rows_a) else ())
            delta.subtract(rows_b[r] if r < len(rows_b) else ())
            # keep negative entries; only exact zeros leave the delta
            self.deltas[r] = Counter({v: c for v, c in delta.items() if c})
        self._synced = True

    def feed_common(self, letter: int) -> None:
        assert self._synced
        chain_a = self.first.push_quiet(letter)
        chain_b = self.second.push_quiet(letter)
        if chain_a == chain_b:
            return  # identical bump chains leave every delta unchanged
        for chain, sign in ((chain_a, 1), (chain_b, -1)):
            deltas = self.deltas
            last = len(chain) - 1
            for r, gained in enumerate(chain):
                delta = deltas[r]
                delta[gained] += sign
                if not delta[gained]:
                    del delta[gained]
                if r < last:
                    lost = chain[r + 1]
                    delta[lost] -= sign
                    if not delta[lost]:
                        del delta[lost]

    def merged(self) -> bool:
        return all(not delta for delta in self.deltas)

    def first_row_state(self) -> tuple:
        """Classify the first-row delta.

        Returns ("merged",), ("surplus", v) when the first stream's row holds
        one extra value v, ("trade", v, w) when the first stream has an extra
        v and the second an extra w with v < w, or ("unknown", items).  The
        surplus form is the one the merge argument bookkeeps; trades arise
        from some swap configurations and resolve into a surplus or a merge.
        """
        delta = self.deltas[0]
        if not delta:
            return ("merged",)
        items = sorted(delta.items())
        if len(items) == 1 and items[0][1] == 1:
            return ("surplus", items[0][0])
        if len(items) == 2:
            (v, cv), (w, cw) = items
            if cv == 1 and cw == -1 and v < w:
                return ("trade", v, w)
        return ("unknown", tuple(items))


def _common_letters(prefix: list[int], start: int, source_letters) -> Iterator[int]:
    """Letters both streams consume after their distinct pair: the rest of
    the prefix, then the shared continuation."""
    for a in prefix[start:]:
        yield a
    while True:
        yield next(source_letters)


def _transposition_trial(payload: dict, trial: int) -> dict:
    p = payload["p"]
    n = payload["n"]
    horizon = payload["horizon"]
    window = payload["permanence_window"]
    k = len(p)
    source = BernoulliSource(p, (payload["seed"], trial, 0))
    chooser = derive_rng(payload["seed"], trial, 1)
    prefix = source.draw(n).tolist()
    candidates = [i for i in range(n - 1) if prefix[i] != prefix[i + 1]]
    record = {
        "trial": trial,
        "degenerate": not candidates,
        "surplus_steps": 0,
        "trade_steps": 0,
        "unknown_steps": 0,
        "surplus_degradations": 0,
        "monotonicity_violations": 0,
        "remerge_violations": 0,
        "permanence_violations": 0,
        "extra_changes": 0,
    }
    if not candidates:  # constant prefix; the swap acts trivially
        record.update(
            {
                "swap_at": None,
                "initial_form": "merged",
                "merged_at": n,
                "first_rows_merged_at": n,
                "censored": False,
            }
        )
        return record
    swap = int(candidates[chooser.integers(len(candidates))])
    low, high = sorted((prefix[swap], prefix[swap + 1]))

    # Feed the shared start, the swapped pair, then sync the deltas.
    pair = _PairedStreams(k)
    for a in prefix[:swap]:
        pair.first.push(a)
        pair.second.push(a)
    pair.feed_distinct(low, high)
    pair.feed_distinct(high, low)
    pair.sync_deltas()

    letters = _common_letters(prefix, swap + 2, source.letters())
    step = swap + 2  # letters consumed so far, 1-based step index
    first_rows_merged_at: int | None = None
    previous: tuple = ("start",)

    def inspect_first_row() -> None:
        nonlocal first_rows_merged_at, previous
        state = pair.first_row_state()
        if first_rows_merged_at is not None:
            if state[0] != "merged":  # equal first rows cannot re-diverge
                record["remerge_violations"] += 1
            return
        kind = state[0]
        if kind == "merged":
            first_rows_merged_at = step
        elif kind == "surplus":
            record["surplus_steps"] += 1
            if previous[0] == "surplus":
                if state[1] < previous[1]:
                    record["monotonicity_violations"] += 1
                if state[1] != previous[1]:
                    record["extra_changes"] += 1
            elif previous[0] == "trade" and state[1] < previous[1]:
                record["monotonicity_violations"] += 1
        elif kind == "trade":
            record["trade_steps"] += 1
            if previous[0] == "surplus":
                record["surplus_degradations"] += 1
            elif previous[0] == "trade" and (
                state[1] < previous[1] or state[2] < previous[2]
            ):
                record["monotonicity_violations"] += 1
        else:
            record["unknown_steps"] += 1
        previous = state

    initial = pair.first_row_state()
    record["initial_form"] = initial[0]
    inspect_first_row()
    merged_at: int | None = step if pair.merged() else None
    while merged_at is None and step < horizon:
        pair.feed_common(next(letters))
        step += 1
        inspect_first_row()
        if pair.merged():
            merged_at = step

    if merged_at is not None:
        for _ in range(window):
            pair.feed_common(next(letters))
            if not pair.merged():
                record["permanence_violations"] += 1
    record.update(
        {
            "swap_at": swap + 1,
            "low": low,
            "high": high,
            "merged_at": merged_at,
            "first_rows_merged_at": first_rows_merged_at,
            "censored": merged_at is None,
        }
    )
    return record


def _merge_statistics(results: list[dict], trials: int) -> dict:
    times = sorted(r["merged_at"] for r in results if not r["censored"])
    censored = sum(1 for r in results if r["censored"])

    def quantile(quant: float) -> int | None:
        if not times:
            return None
        return times[min(len(times) - 1, int(quant * len(times)))]

    return {
        "censored": censored,
        "censored_fraction": censored / trials if trials else 0.0,
        "median": quantile(0.5),
        "q90": quantile(0.9),
        "q99": quantile(0.99),
        "max_observed": times[-1] if times else None,
    }


def transposition_coupling(
    *,
    p: Sequence[float],
    n: int,
    trials: int,
    horizon: int,
    seed: int,
    epsilon: float = 0.01,
    permanence_window: int = 50,
    parallelism: int = 1,
) -> ExperimentReport:
    """Swap one adjacent unequal pair in the first n letters and couple.

    Per trial, the least step at which the two insertion tableaux become
    equal (censored at ``horizon``).  Exact invariants, any violation of
    which fails the run: the pre-merge first-row delta is always one surplus
    value on the ascending side, that value never decreases, and equality
    persists for ``permanence_window`` steps after the merge.
    """
    p = tuple(BernoulliSource(p, 0).p)
    if n < 2:
        raise ValueError("need n >= 2 to transpose")
    if horizon < n + 1:
        raise ValueError("horizon must exceed n")
    payload = {
        "p": p,
        "n": n,
        "horizon": horizon,
        "permanence_window": permanence_window,
        "seed": seed,
    }
    results = run_trials(_transposition_trial, payload, trials, parallelism)

    # The surplus bookkeeping is asserted universally: any pre-merge step
    # whose first-row delta is not a single surplus value counts against it.
    # Swaps landing on a first row with larger entries above the swapped pair
    # start in a trade state (+v/-w) instead, so the universal form does fail
    # there by construction; the trade steps are classified and tracked so
    # the report separates that known initialization gap from genuine
    # bookkeeping breakage (unknown forms, degradations, decreasing values).
    eq3_trials = [r for r in results if r["trade_steps"] or r["unknown_steps"]]
    structural = [
        r
        for r in results
        if r["unknown_steps"]
        or r["surplus_degradations"]
        or r["monotonicity_violations"]
        or r["remerge_violations"]
        or r["permanence_violations"]
    ]
    stats = _merge_statistics(results, trials)
    stats.update(
        {
            "rows": results,
            "degenerate": sum(1 for r in results if r["degenerate"]),
            "initial_forms": {
                form: sum(1 for r in results if r["initial_form"] == form)
                for form in ("merged", "surplus", "trade", "unknown")
            },
            "eq_universal_ok": not eq3_trials,
            "eq_violating_trials": [r["trial"] for r in eq3_trials],
            "eq_scoped_ok": not structural
            and all(
                r["trade_steps"] == 0
                for r in results
                if r["initial_form"] in ("merged", "surplus")
            ),
            "trade_step_total": sum(r["trade_steps"] for r in results),
            "unknown_step_total": sum(r["unknown_steps"] for r in results),
            "surplus_degradation_total": sum(r["surplus_degradations"] for r in results),
            "monotonicity_violation_total": sum(
                r["monotonicity_violations"] for r in results
            ),
            "remerge_violation_total": sum(r["remerge_violations"] for r in results),
            "permanence_violation_total": sum(
                r["permanence_violations"] for r in results
            ),
            "mean_extra_changes": (
                sum(r["extra_changes"] for r in results) / trials if trials else 0.0
            ),
        }
    )
    flagged = {r["trial"]: r for r in eq3_trials + structural}
    failures = [
        {
            "trial": r["trial"],
            "initial_form": r["initial_form"],
            "trade_steps": r["trade_steps"],
            "unknown_steps": r["unknown_steps"],
            "surplus_degradations": r["surplus_degradations"],
            "monotonicity_violations": r["monotonicity_violations"],
            "remerge_violations": r["remerge_violations"],
            "permanence_violations": r["permanence_violations"],
        }
        for r in sorted(flagged.values(), key=lambda r: r["trial"])
    ]
    exact_ok = not eq3_trials and not structural
    return ExperimentReport(
        experiment="transposition_coupling",
        parameters={
            "p": list(p),
            "n": n,
            "trials": trials,
            "horizon": horizon,
            "epsilon": epsilon,
            "permanence_window": permanence_window,
            "seed": seed,
        },
        statistics=stats,
        verdict=verdict_of(exact_ok, stats["censored_fraction"] <= epsilon),
        failures=failures,
    )


def _orbit_trial(payload: dict, trial: int) -> dict:
    p = payload["p"]
    n = payload["n"]
    horizon = payload["horizon"]
    window = payload["permanence_window"]
    k = len(p)
    source = BernoulliSource(p, (payload["seed"], trial, 0))
    shuffler = derive_rng(payload["seed"], trial, 1)
    prefix = source.draw(n).tolist()
    shuffled = [prefix[i] for i in shuffler.permutation(n)]

    pair = _PairedStreams(k)
    for a, b in zip(prefix, shuffled):
        pair.feed_distinct(a, b)
    pair.sync_deltas()

    letters = source.letters()
    step = n
    merged_at: int | None = step if pair.merged() else None
    while merged_at is None and step < horizon:
        pair.feed_common(next(letters))
        step += 1
        if pair.merged():
            merged_at = step
    permanence_violations = 0
    if merged_at is not None:
        for _ in range(window):
            pair.feed_common(next(letters))
            if not pair.merged():
                permanence_violations += 1
    return {
        "trial": trial,
        "merged_at": merged_at,
        "censored": merged_at is None,
        "permanence_violations": permanence_violations,
    }


def de_finetti_merge(
    *,
    p: Sequence[float],
    n: int,
    trials: int,
    horizon: int,
    seed: int,
    epsilon: float = 0.01,
    permanence_window: int = 50,
    parallelism: int = 1,
) -> ExperimentReport:
    """Shuffle the whole first-n block uniformly and couple until the merge.

    The full-orbit counterpart of the adjacent-swap experiment: no reduction
    to adjacent swaps is assumed.  Merge times are measured from step n.
    """
    p = tuple(BernoulliSource(p, 0).p)
    if n < 1:
        raise ValueError("need n >= 1")
    if horizon < n:
        raise ValueError("horizon must be at least n")
    payload = {
        "p": p,
        "n": n,
        "horizon": horizon,
        "permanence_window": permanence_window,
        "seed": seed,
    }
    results = run_trials(_orbit_trial, payload, trials, parallelism)
    stats = _merge_statistics(results, trials)
    stats.update(
        {
            "rows": results,
            "permanence_violation_total": sum(
                r["permanence_violations"] for r in results
            ),
        }
    )
    exact_ok = stats["permanence_violation_total"] == 0
    failures = [
        {"trial": r["trial"], "permanence_violations": r["permanence_violations"]}
        for r in results
        if r["permanence_violations"]
    ]
    return ExperimentReport(
        experiment="de_finetti_merge",
        parameters={
            "p": list(p),
            "n": n,
            "trials": trials,
            "horizon": horizon,
            "epsilon": epsilon,
            "permanence_window": permanence_window,
            "seed": seed,
        },
        statistics=stats,
        verdict=verdict_of(exact_ok, stats["censored_fraction"] <= epsilon),
        failures=failures,
    )
