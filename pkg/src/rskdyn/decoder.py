"""Recover source letters from an observed recording tableau.

A recording tableau pins its source word down to one coplactic class; the
positions where all class members agree are already determined.  As the
observed prefix grows, the determined region creeps toward the full prefix,
which is what ``determination_curve`` measures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .equivalence import (
    count_semistandard_fillings,
    semistandard_fillings,
)
from .stream import RskStream
from .tableau import (
    StandardTableau,
    Word,
    _reverse_word,
    find_violation,
)

__all__ = ["CandidateLimitError", "DecodeResult", "decode", "determination_curve"]

DEFAULT_CANDIDATE_LIMIT = 10**6


class CandidateLimitError(RuntimeError):
    """The coplactic class is too large to materialize under the configured cap."""

    def __init__(self, count: int, limit: int):
        super().__init__(f"coplactic class has {count} members, above the cap of {limit}")
        self.count = count
        self.limit = limit


@dataclass(frozen=True)
class DecodeResult:
    """Everything a recording tableau reveals about its source word.

    ``determined`` holds a letter where all candidates agree and None where
    they differ; ``candidates`` is the full coplactic class.
    """

    q: StandardTableau
    k: int
    candidates: frozenset[Word]
    determined: tuple[int | None, ...]

    @property
    def n(self) -> int:
        return self.q.size

    @property
    def candidate_count(self) -> int:
        return len(self.candidates)

    def determined_fraction(self, upto: int | None = None) -> float:
        """Fraction of the first ``upto`` positions (default: all) determined."""
        if upto is None:
            upto = self.n
        if upto == 0:
            return 1.0
        window = self.determined[:upto]
        return sum(1 for a in window if a is not None) / len(window)

    def as_dict(self) -> dict:
        return {
            "determined": [a for a in self.determined],
            "candidates": self.candidate_count,
            "n": self.n,
        }


def decode(
    q: StandardTableau, k: int, *, max_candidates: int = DEFAULT_CANDIDATE_LIMIT
) -> DecodeResult:
    """Enumerate the coplactic class of ``q`` over 1..k and intersect letters.

    Raises ValueError when the shape is too deep for the alphabet (the class
    is empty) and CandidateLimitError when the class, counted up front by the
    hook content formula, exceeds ``max_candidates``.
    """
    bad = find_violation(q.rows, "standard")
    if bad is not None:
        raise ValueError(f"invalid recording tableau: {bad}")
    if len(q.rows) > k:
        raise ValueError(
            f"shape has {len(q.rows)} rows but the alphabet has only {k} letters"
        )
    count = count_semistandard_fillings(q.shape, k)
    if count > max_candidates:
        raise CandidateLimitError(count, max_candidates)
    cells = q.entry_cells()
    n = q.size
    determined: list[int | None] = []
    words: list[Word] = []
    for p in semistandard_fillings(q.shape, k):
        letters = _reverse_word([list(row) for row in p.rows], cells)
        words.append(Word(tuple(letters), k))
        if not determined:
            determined = list(letters)
        else:
            for i in range(n):
                if determined[i] is not None and determined[i] != letters[i]:
                    determined[i] = None
    assert len(words) == count
    return DecodeResult(q, k, frozenset(words), tuple(determined))


def determination_curve(
    x: Word,
    grid: list[int] | None = None,
    *,
    max_candidates: int = DEFAULT_CANDIDATE_LIMIT,
) -> list[tuple[int, float, float]]:
    """Decode growing prefixes of ``x`` and report determined fractions.

    For each prefix length n in ``grid`` (default: powers of two up to
    len(x), then len(x) itself), returns (n, fraction of positions <= n
    determined, fraction of positions <= n//2 determined), all read off the
    recording tableau of the length-n prefix alone.
    """
    total = len(x)
    if grid is None:
        grid = []
        n = 1
        while n < total:
            grid.append(n)
            n *= 2
        grid.append(total)
    if any(n < 0 or n > total for n in grid):
        raise ValueError("grid entries must lie in 0..len(x)")
    stream = RskStream(x.k)
    out: list[tuple[int, float, float]] = []
    consumed = 0
    for n in sorted(set(grid)):
        while consumed < n:
            stream.push(x.letters[consumed])
            consumed += 1
        result = decode(stream.recording_tableau(), x.k, max_candidates=max_candidates)
        out.append((n, result.determined_fraction(), result.determined_fraction(n // 2)))
    return out
