"""Seeded letter sources for the experiment harness.

Every random stream is derived from a master seed plus an explicit index
path, so a trial's letters are the same whether it runs serially or on any
number of workers.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

__all__ = ["BernoulliSource", "derive_rng", "check_probabilities"]

PROB_SUM_TOLERANCE = 1e-12


def derive_rng(seed: int, *path: int) -> np.random.Generator:
    """Generator for the stream addressed by (seed, *path).

    Streams with different paths are statistically independent, and the
    derivation does not depend on the order streams are created in.
    """
    if seed < 0 or seed >= 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.default_rng(np.random.SeedSequence([seed, *path]))


def check_probabilities(p: Sequence[float], *, allow_unsorted: bool = False) -> tuple[float, ...]:
    """Validate a letter distribution: positive entries summing to 1.

    Entries must be nonincreasing unless ``allow_unsorted`` is set; callers
    that set it should surface a warning in their reports.
    """
    p = tuple(float(x) for x in p)
    if not p:
        raise ValueError("probability vector is empty")
    if any(x <= 0 for x in p):
        raise ValueError(f"probabilities must be strictly positive, got {p}")
    if abs(sum(p) - 1.0) > PROB_SUM_TOLERANCE:
        raise ValueError(f"probabilities sum to {sum(p)!r}, not 1")
    if not allow_unsorted and any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"probabilities must be nonincreasing, got {p}")
    return p


class BernoulliSource:
    """Independent letters 1..k with fixed distribution ``p``.

    ``seed`` may be a bare 64-bit integer or an index path (master seed plus
    trial and substream indices).  ``counter`` reports letters drawn so far.
    """

    def __init__(
        self, p: Sequence[float], seed: int | Sequence[int], *, allow_unsorted: bool = False
    ) -> None:
        self.p = check_probabilities(p, allow_unsorted=allow_unsorted)
        self.k = len(self.p)
        if isinstance(seed, int):
            seed = (seed,)
        self.seed_path = tuple(int(s) for s in seed)
        self._rng = derive_rng(*self.seed_path)
        cumulative = np.cumsum(self.p)
        cumulative[-1] = 1.0  # guard the top edge against rounding
        self._cumulative = cumulative
        self.counter = 0

    def draw(self, n: int) -> np.ndarray:
        """Draw ``n`` letters as an int64 array."""
        u = self._rng.random(n)
        letters = np.searchsorted(self._cumulative, u, side="right") + 1
        self.counter += n
        return letters

    def letters(self, block: int = 4096) -> Iterator[int]:
        """Endless letter iterator, drawn in blocks."""
        while True:
            for a in self.draw(block).tolist():
                yield a
