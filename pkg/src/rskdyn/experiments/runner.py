"""Deterministic parallel execution of independent trials.

Each trial's randomness is addressed by (master seed, trial index), so the
result list depends only on the payload, never on worker count or
scheduling.  Results come back ordered by trial index.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable

__all__ = ["run_trials"]


def run_trials(
    trial_fn: Callable[[dict, int], dict],
    payload: dict,
    trials: int,
    parallelism: int = 1,
) -> list[dict]:
    """Run ``trial_fn(payload, index)`` for each index, possibly in a pool.

    ``trial_fn`` must be a module-level function and ``payload`` picklable.
    """
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    if parallelism < 1:
        raise ValueError("parallelism must be >= 1")
    if parallelism == 1 or trials <= 1:
        return [trial_fn(payload, t) for t in range(trials)]
    bound = partial(trial_fn, payload)
    chunksize = max(1, trials // (parallelism * 4))
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(bound, range(trials), chunksize=chunksize))
