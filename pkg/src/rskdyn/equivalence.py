"""Equivalence predicates and class enumerators for words under RSK.

Five partition families act on truncated points (a prefix of declared length
plus a finite tail standing in for the rest of the sequence): prefix and tail
equality, the permutation-orbit (de Finetti) relation, and the two relations
induced by the RSK tableaux — same insertion tableau (plactic) and same
recording tableau (coplactic).

Class enumeration goes through inverse RSK over enumerated recording or
insertion tableaux, so its cost is polynomial in the class size; filtering
the full letter cube is left to the test suite as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from .tableau import (
    RskPair,
    SemistandardTableau,
    Shape,
    StandardTableau,
    Word,
    _reverse_word,
    find_violation,
    is_partition,
    rsk,
)

__all__ = [
    "TruncatedPoint",
    "ClassLabel",
    "plactic_equivalent",
    "coplactic_equivalent",
    "enumerate_plactic_class",
    "enumerate_coplactic_class",
    "de_finetti_equivalent",
    "young_tail_equivalent",
    "bernoulli_equivalent",
    "standard_tableaux",
    "semistandard_fillings",
    "count_semistandard_fillings",
    "words_as_json",
]


@dataclass(frozen=True)
class TruncatedPoint:
    """A word split into a length-n prefix and a finite tail.

    The tail is a desk-scale surrogate for an infinite continuation; every
    "for all later steps" statement about a truncated point is understood up
    to the horizon ``n + len(tail)``.
    """

    prefix: Word
    tail: Word

    def __post_init__(self) -> None:
        if self.prefix.k != self.tail.k:
            raise ValueError(
                f"prefix and tail use different alphabets ({self.prefix.k} vs {self.tail.k})"
            )

    @property
    def n(self) -> int:
        return len(self.prefix)

    @property
    def horizon(self) -> int:
        return len(self.prefix) + len(self.tail)

    def full_word(self) -> Word:
        return Word(self.prefix.letters + self.tail.letters, self.prefix.k)


@dataclass(frozen=True)
class ClassLabel:
    """Names one equivalence class by its indexing tableau."""

    kind: Literal["plactic", "coplactic"]
    tableau: SemistandardTableau | StandardTableau

    def __post_init__(self) -> None:
        if self.kind == "plactic" and not isinstance(self.tableau, SemistandardTableau):
            raise ValueError("plactic classes are indexed by semistandard tableaux")
        if self.kind == "coplactic" and not isinstance(self.tableau, StandardTableau):
            raise ValueError("coplactic classes are indexed by standard tableaux")
        if self.kind not in ("plactic", "coplactic"):
            raise ValueError(f"unknown class kind {self.kind!r}")


def _check_same_length(u: Word, v: Word) -> None:
    if len(u) != len(v):
        raise ValueError(f"words have different lengths ({len(u)} vs {len(v)})")


def plactic_equivalent(u: Word, v: Word) -> bool:
    """True iff the two words have the same insertion tableau."""
    _check_same_length(u, v)
    if u.k != v.k:
        raise ValueError(f"words use different alphabets ({u.k} vs {v.k})")
    return rsk(u).p == rsk(v).p


def coplactic_equivalent(u: Word, v: Word) -> bool:
    """True iff the two words have the same recording tableau."""
    _check_same_length(u, v)
    return rsk(u).q == rsk(v).q


def standard_tableaux(shape: Shape) -> Iterator[StandardTableau]:
    """All standard tableaux of the given shape, by corner backtracking."""
    if not is_partition(tuple(shape)):
        raise ValueError(f"{shape!r} is not a partition")
    shape = tuple(shape)
    rows = [[0] * length for length in shape]
    lens = list(shape)

    def place(step: int) -> Iterator[StandardTableau]:
        if step == 0:
            yield StandardTableau(rows)
            return
        for i, length in enumerate(lens):
            if length > 0 and (i + 1 == len(lens) or lens[i + 1] < length):
                rows[i][length - 1] = step
                lens[i] -= 1
                yield from place(step - 1)
                lens[i] += 1

    return place(sum(shape))


def semistandard_fillings(shape: Shape, max_entry: int) -> Iterator[SemistandardTableau]:
    """All semistandard tableaux of the given shape with entries <= max_entry.

    Cells are filled row-major with an explicit cursor rather than recursion,
    so shapes with thousands of cells are fine.  Each cell is bounded below by
    its left and upper neighbours and above by the room its column still needs
    for strictly larger entries, so no partial filling is ever a dead end and
    the cost is linear per filling produced.
    """
    shape = tuple(shape)
    if not is_partition(shape) and shape != ():
        raise ValueError(f"{shape!r} is not a partition")
    if len(shape) > max_entry:
        return
    if not shape:
        yield SemistandardTableau(())
        return
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    col_len = [sum(1 for length in shape if length > j) for j in range(shape[0])]
    upper = [max_entry - (col_len[j] - i - 1) for i, j in cells]
    grid = [[0] * length for length in shape]
    ncells = len(cells)
    idx = 0
    advancing = True
    while True:
        if advancing:
            while idx < ncells:
                i, j = cells[idx]
                lo = 1
                if j:
                    lo = grid[i][j - 1]
                if i:
                    lo = max(lo, grid[i - 1][j] + 1)
                if lo > upper[idx]:  # unreachable for straight shapes; guard anyway
                    break
                grid[i][j] = lo
                idx += 1
            else:
                yield SemistandardTableau(grid)
            advancing = False
            idx -= 1
        else:
            while idx >= 0:
                i, j = cells[idx]
                if grid[i][j] < upper[idx]:
                    break
                idx -= 1
            if idx < 0:
                return
            i, j = cells[idx]
            grid[i][j] += 1
            idx += 1
            advancing = True


def count_semistandard_fillings(shape: Shape, max_entry: int) -> int:
    """Number of semistandard tableaux of a shape with entries <= max_entry.

    Computed by the hook content formula, independently of the enumerator.
    """
    shape = tuple(shape)
    if shape and not is_partition(shape):
        raise ValueError(f"{shape!r} is not a partition")
    if len(shape) > max_entry:
        return 0
    col_len = [sum(1 for length in shape if length > j) for j in range(shape[0] if shape else 0)]
    num = den = 1
    for i, length in enumerate(shape):
        for j in range(length):
            num *= max_entry + j - i
            den *= (length - 1 - j) + (col_len[j] - i)
    assert num % den == 0
    return num // den


def enumerate_plactic_class(t: SemistandardTableau, k: int | None = None) -> set[Word]:
    """All words with insertion tableau ``t``: one per standard tableau of its shape."""
    bad = find_violation(t.rows, "semistandard")
    if bad is not None:
        raise ValueError(f"invalid semistandard tableau: {bad}")
    if k is None:
        k = max((a for row in t.rows for a in row), default=1)
    out = set()
    for q in standard_tableaux(t.shape):
        p_rows = [list(row) for row in t.rows]
        letters = _reverse_word(p_rows, q.entry_cells())
        out.add(Word(tuple(letters), k))
    return out


def enumerate_coplactic_class(t: StandardTableau, k: int) -> set[Word]:
    """All words over 1..k with recording tableau ``t``.

    One word per semistandard filling of the shape with entries <= k; the set
    is empty when the shape has more than k rows, since no filling exists.
    """
    bad = find_violation(t.rows, "standard")
    if bad is not None:
        raise ValueError(f"invalid standard tableau: {bad}")
    cells = t.entry_cells()
    out = set()
    for p in semistandard_fillings(t.shape, k):
        p_rows = [list(row) for row in p.rows]
        letters = _reverse_word(p_rows, cells)
        out.add(Word(tuple(letters), k))
    return out


def de_finetti_equivalent(a: TruncatedPoint, b: TruncatedPoint) -> bool:
    """True iff the prefixes are rearrangements of each other and the tails agree."""
    if a.n != b.n:
        raise ValueError(f"split indices differ ({a.n} vs {b.n})")
    return (
        a.tail.letters == b.tail.letters
        and sorted(a.prefix.letters) == sorted(b.prefix.letters)
    )


def young_tail_equivalent(a: TruncatedPoint, b: TruncatedPoint) -> bool:
    """True iff the prefixes share an insertion tableau and the tails agree.

    When true, the two extended words grow through identical shapes at every
    step from the split to the horizon: the insertion state is equal at the
    split and both consume the same tail.
    """
    if a.n != b.n:
        raise ValueError(f"split indices differ ({a.n} vs {b.n})")
    if len(a.tail) != len(b.tail):
        raise ValueError(f"tail lengths differ ({len(a.tail)} vs {len(b.tail)})")
    return a.tail.letters == b.tail.letters and plactic_equivalent(a.prefix, b.prefix)


def bernoulli_equivalent(
    a: TruncatedPoint, b: TruncatedPoint, which: Literal["cylinder", "tail"]
) -> bool:
    """Prefix equality ("cylinder") or tail equality ("tail") at the same split."""
    if a.n != b.n:
        raise ValueError(f"split indices differ ({a.n} vs {b.n})")
    if which == "cylinder":
        return a.prefix.letters == b.prefix.letters
    if which == "tail":
        return a.tail.letters == b.tail.letters
    raise ValueError(f"unknown partition kind {which!r}")


def words_as_json(words: set[Word]) -> list:
    """Serialize a word set: digit strings for k <= 9, else integer arrays."""
    ordered = sorted(words, key=lambda w: w.letters)
    if all(w.k <= 9 for w in ordered):
        return [str(w) for w in ordered]
    return [list(w.letters) for w in ordered]
