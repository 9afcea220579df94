"""Matching calculus for two-letter words.

Scanning left to right, every descent "2 then 1" is matched, innermost first,
until the unmatched letters read as a block of 1s followed by a block of 2s.
The number of matched pairs (the rank) equals the second row length of the
word's RSK shape, and the matched index set determines the recording tableau;
both facts are exercised exhaustively in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .equivalence import TruncatedPoint
from .tableau import Word

__all__ = [
    "BracketAnalysis",
    "bracket",
    "rank",
    "bracket_equivalent",
    "young_tail_equivalent_binary",
]


@dataclass(frozen=True)
class BracketAnalysis:
    """Matched index pairs and leftover free indices of a binary word.

    Indices are 1-based.  Each pair (i, j) has i < j, letter 2 at i and
    letter 1 at j; the free indices carry first 1s, then 2s.
    """

    word: Word
    pairs: frozenset[tuple[int, int]]
    free_indices: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict:
        return {
            "rank": self.rank,
            "pairs": [list(p) for p in sorted(self.pairs)],
            "free": list(self.free_indices),
        }


def _check_binary(w: Word) -> None:
    for i, a in enumerate(w.letters):
        if a not in (1, 2):
            raise ValueError(f"letter {a} at position {i + 1} is not in the alphabet {{1,2}}")


def bracket(w: Word) -> BracketAnalysis:
    """Match descents in one stack pass: push each 2, pair it with the next free 1.

    Equivalent to repeatedly bracketing adjacent "21" factors until none
    remain (the repeated-scan form is kept as an oracle in the tests), but
    linear time.
    """
    _check_binary(w)
    open_twos: list[int] = []
    pairs: list[tuple[int, int]] = []
    free_ones: list[int] = []
    for idx, a in enumerate(w.letters, start=1):
        if a == 2:
            open_twos.append(idx)
        elif open_twos:
            pairs.append((open_twos.pop(), idx))
        else:
            free_ones.append(idx)
    return BracketAnalysis(w, frozenset(pairs), tuple(free_ones + open_twos))


def rank(w: Word) -> int:
    """Number of matched pairs; equals the second row length of the RSK shape."""
    _check_binary(w)
    depth = 0
    matched = 0
    for a in w.letters:
        if a == 2:
            depth += 1
        elif depth:
            depth -= 1
            matched += 1
    return matched


def bracket_equivalent(u: Word, v: Word) -> bool:
    """True iff the two binary words match the same index pairs.

    Equal pair sets force equal letters at every matched position, and this
    coincides with having the same recording tableau.
    """
    if len(u) != len(v):
        raise ValueError(f"words have different lengths ({len(u)} vs {len(v)})")
    return bracket(u).pairs == bracket(v).pairs


def young_tail_equivalent_binary(a: TruncatedPoint, b: TruncatedPoint) -> bool:
    """Equal rank, equal letter counts, identical tails.

    For binary prefixes the first two conditions say exactly that the
    insertion tableaux agree, so this matches the general predicate built on
    insertion-tableau equality.
    """
    if a.n != b.n:
        raise ValueError(f"split indices differ ({a.n} vs {b.n})")
    _check_binary(a.prefix)
    _check_binary(b.prefix)
    if a.tail.letters != b.tail.letters:
        return False
    if sorted(a.prefix.letters) != sorted(b.prefix.letters):
        return False
    return rank(a.prefix) == rank(b.prefix)
