"""Young tableaux and the RSK correspondence over a finite ordered alphabet.

Letters are the integers 1..k.  A tableau is stored ragged row-major as a
tuple of rows; cells and entries are reported 1-based throughout.  All values
here are immutable after construction, so they are safe to share between
threads.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass

Shape = tuple[int, ...]

__all__ = [
    "Shape",
    "Word",
    "Violation",
    "SemistandardTableau",
    "StandardTableau",
    "RskPair",
    "is_partition",
    "find_violation",
    "validate",
    "check_pair",
    "row_insert",
    "rsk",
    "rsk_inverse",
    "shape_of",
]


def is_partition(rows: tuple[int, ...]) -> bool:
    """True iff ``rows`` is a weakly decreasing tuple of positive integers."""
    return all(a > 0 for a in rows) and all(a >= b for a, b in zip(rows, rows[1:]))


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters from the alphabet {1, ..., k}."""

    letters: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.k < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.k}")
        for i, a in enumerate(self.letters):
            if not 1 <= a <= self.k:
                raise ValueError(
                    f"letter {a} at position {i + 1} outside alphabet 1..{self.k}"
                )

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "Word":
        """Parse a word from text.

        Digit strings ("211") serve alphabets with k <= 9; larger alphabets
        use comma-separated integers ("10,2,11").  When ``k`` is omitted it
        defaults to the largest letter present (1 for the empty word).
        """
        text = text.strip()
        if not text:
            letters: tuple[int, ...] = ()
        elif "," in text:
            letters = tuple(int(part) for part in text.split(","))
        else:
            if not text.isdigit():
                raise ValueError(f"cannot parse word from {text!r}")
            letters = tuple(int(ch) for ch in text)
        if k is None:
            k = max(letters, default=1)
        return cls(letters, k)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if self.k <= 9:
            return "".join(str(a) for a in self.letters)
        return ",".join(str(a) for a in self.letters)

    def prefix(self, n: int) -> "Word":
        return Word(self.letters[:n], self.k)

    def content(self) -> Counter:
        """Multiset of letters."""
        return Counter(self.letters)


@dataclass(frozen=True)
class Violation:
    """First cell (1-based) at which a tableau breaks its defining rules."""

    cell: tuple[int, int] | None
    reason: str

    def __str__(self) -> str:
        where = f" at cell {self.cell}" if self.cell else ""
        return f"{self.reason}{where}"


def _rows_tuple(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class SemistandardTableau:
    """Rows weakly increase left to right; columns strictly increase downward."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", _rows_tuple(self.rows))

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def content(self) -> Counter:
        return Counter(a for row in self.rows for a in row)

    def as_dict(self) -> dict:
        return {"rows": [list(row) for row in self.rows]}


@dataclass(frozen=True)
class StandardTableau:
    """Entries are exactly 1..n, each once; rows and columns strictly increase."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", _rows_tuple(self.rows))

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entry_cells(self) -> list[tuple[int, int]]:
        """Cell (row, col), 1-based, of each entry 1..n, in entry order."""
        cells: list[tuple[int, int] | None] = [None] * self.size
        for i, row in enumerate(self.rows):
            for j, a in enumerate(row):
                cells[a - 1] = (i + 1, j + 1)
        return cells  # type: ignore[return-value]

    def as_dict(self) -> dict:
        return {"rows": [list(row) for row in self.rows]}


@dataclass(frozen=True)
class RskPair:
    """An insertion tableau and its recording tableau, of equal shape."""

    p: SemistandardTableau
    q: StandardTableau

    def as_dict(self) -> dict:
        return {"p": self.p.as_dict(), "q": self.q.as_dict()}


def find_violation(rows, kind: str) -> Violation | None:
    """Locate the first broken tableau rule, or return None if valid.

    ``kind`` is "semistandard" or "standard".  Cells are scanned row-major;
    shape problems (a row longer than the one above it) are reported on the
    offending row's first out-of-shape cell.
    """
    if kind not in ("semistandard", "standard"):
        raise ValueError(f"unknown tableau kind {kind!r}")
    grid = _rows_tuple(rows)
    for i, row in enumerate(grid):
        if not row:
            return Violation((i + 1, 1), "empty row")
        if i > 0 and len(row) > len(grid[i - 1]):
            return Violation((i + 1, len(grid[i - 1]) + 1), "row longer than the row above")
        for j, a in enumerate(row):
            if not isinstance(a, int) or a < 1:
                return Violation((i + 1, j + 1), f"entry {a!r} is not a positive integer")
            if j > 0:
                left = row[j - 1]
                if kind == "semistandard" and a < left:
                    return Violation((i + 1, j + 1), f"row decreases ({left} then {a})")
                if kind == "standard" and a <= left:
                    return Violation((i + 1, j + 1), f"row does not increase ({left} then {a})")
            if i > 0 and a <= grid[i - 1][j]:
                return Violation(
                    (i + 1, j + 1), f"column does not increase ({grid[i - 1][j]} then {a})"
                )
    if kind == "standard":
        entries = sorted(a for row in grid for a in row)
        n = len(entries)
        for expected, got in zip(range(1, n + 1), entries):
            if got != expected:
                word = "duplicate" if entries.count(got) > 1 else "missing"
                bad = got if word == "duplicate" else expected
                for i, row in enumerate(grid):
                    if bad in row:
                        return Violation((i + 1, row.index(bad) + 1), f"{word} entry {bad}")
                return Violation(None, f"missing entry {expected}")
    return None


def validate(rows, kind: str) -> tuple[bool, Violation | None]:
    """Check tableau validity; on failure the violation names the first bad cell."""
    violation = find_violation(rows, kind)
    return violation is None, violation


def check_pair(pair: RskPair) -> None:
    """Raise ValueError unless ``pair`` is a well-formed tableau pair."""
    bad_p = find_violation(pair.p.rows, "semistandard")
    if bad_p is not None:
        raise ValueError(f"invalid insertion tableau: {bad_p}")
    bad_q = find_violation(pair.q.rows, "standard")
    if bad_q is not None:
        raise ValueError(f"invalid recording tableau: {bad_q}")
    if pair.p.shape != pair.q.shape:
        raise ValueError(f"shape mismatch: {pair.p.shape} vs {pair.q.shape}")


def shape_of(t: SemistandardTableau | StandardTableau) -> Shape:
    """Row-length vector of a tableau."""
    return t.shape


def _insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Bump ``x`` through mutable rows; return the new cell, 0-based."""
    r = 0
    while r < len(rows):
        row = rows[r]
        if x >= row[-1]:
            row.append(x)
            return r, len(row) - 1
        pos = bisect_right(row, x)
        x, row[pos] = row[pos], x
        r += 1
    rows.append([x])
    return r, 0


def row_insert(
    p: SemistandardTableau, letter: int, k: int | None = None
) -> tuple[SemistandardTableau, tuple[int, int]]:
    """Insert one letter by row bumping.

    Returns the grown tableau and the coordinates (row, col), 1-based, of the
    single cell the insertion created.  The bumped entry in each row is the
    leftmost one strictly greater than the incoming value.
    """
    if letter < 1 or (k is not None and letter > k):
        upper = k if k is not None else "k"
        raise ValueError(f"letter {letter} outside alphabet 1..{upper}")
    rows = [list(row) for row in p.rows]
    r, c = _insert(rows, letter)
    return SemistandardTableau(rows), (r + 1, c + 1)


def rsk(w: Word) -> RskPair:
    """Apply RSK insertion to a whole word.

    The insertion tableau collects the letters; the recording tableau marks
    each step's new cell with the step number, so its restriction to entries
    <= n is the recording tableau of the length-n prefix.
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, letter in enumerate(w.letters, start=1):
        r, _ = _insert(p_rows, letter)
        if r == len(q_rows):
            q_rows.append([step])
        else:
            q_rows[r].append(step)
    return RskPair(SemistandardTableau(p_rows), StandardTableau(q_rows))


def _reverse_word(p_rows: list[list[int]], cells: list[tuple[int, int]]) -> list[int]:
    """Undo insertions whose new cells, 1-based and in step order, are ``cells``.

    Consumes ``p_rows``.  Returns the recovered letters in original order.
    """
    out: list[int] = []
    for r1, c1 in reversed(cells):
        r = r1 - 1
        if c1 != len(p_rows[r]):
            raise ValueError(f"cell ({r1},{c1}) is not removable")
        x = p_rows[r].pop()
        if not p_rows[r]:
            p_rows.pop()
        while r > 0:
            r -= 1
            row = p_rows[r]
            pos = bisect_left(row, x) - 1
            if pos < 0:
                raise ValueError("reverse bumping found no smaller entry above")
            x, row[pos] = row[pos], x
        out.append(x)
    out.reverse()
    return out


def rsk_inverse(pair: RskPair, k: int | None = None) -> Word:
    """Recover the unique word whose RSK image is ``pair``.

    Cells are peeled in decreasing recording-entry order and reverse bumped.
    ``k`` sets the alphabet of the returned word (default: largest letter in
    the insertion tableau).  Malformed pairs raise ValueError.
    """
    check_pair(pair)
    cells = pair.q.entry_cells()
    p_rows = [list(row) for row in pair.p.rows]
    letters = _reverse_word(p_rows, cells)
    if k is None:
        k = max(letters, default=1)
    return Word(tuple(letters), k)
