"""One-letter-at-a-time RSK insertion.

``RskStream`` carries the insertion tableau of everything consumed so far and
(optionally) the sequence of cells created, which is the recording tableau in
growth-sequence form.  A stream instance is single-writer: share it between
threads only with external synchronization, or give each worker its own.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import NamedTuple

from .tableau import RskPair, SemistandardTableau, Shape, StandardTableau

__all__ = ["ShapeEvent", "RskStream"]


class ShapeEvent(NamedTuple):
    """One growth step: at ``step``, row ``row_incremented`` (1-based) gained a cell."""

    step: int
    row_incremented: int
    new_shape: Shape

    def as_dict(self) -> dict:
        return {
            "step": self.step,
            "row": self.row_incremented,
            "shape": list(self.new_shape),
        }


class RskStream:
    """Streaming RSK state over the alphabet 1..k.

    ``record_cells`` keeps the cell-addition sequence needed to materialize
    the recording tableau; ``history_limit`` bounds how many trailing shapes
    are retained (None keeps the full path, 0 keeps none).  Million-step runs
    typically want ``record_cells=False, history_limit=0``.
    """

    __slots__ = ("k", "_rows", "_cells", "_history", "_history_limit", "_n")

    def __init__(
        self,
        k: int,
        *,
        record_cells: bool = True,
        history_limit: int | None = None,
    ) -> None:
        if k < 1:
            raise ValueError(f"alphabet size must be >= 1, got {k}")
        if history_limit is not None and history_limit < 0:
            raise ValueError("history_limit must be None or >= 0")
        self.k = k
        self._rows: list[list[int]] = []
        self._cells: list[tuple[int, int]] | None = [] if record_cells else None
        # with history_limit == 0 no history list is maintained at all; the
        # current shape is always recomputable from the rows
        self._history: list[Shape] | None = None if history_limit == 0 else [()]
        self._history_limit = history_limit
        self._n = 0

    @property
    def n(self) -> int:
        """Letters consumed."""
        return self._n

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self._rows)

    @property
    def shape_history(self) -> tuple[Shape, ...]:
        """Retained trailing shapes, ending with the current one (index 0 is
        the oldest retained; with full history, entry n is the shape after n
        letters)."""
        if self._history is None:
            return (self.shape,)
        return tuple(self._history)

    @property
    def q_cells(self) -> tuple[tuple[int, int], ...]:
        if self._cells is None:
            raise ValueError("cell recording is disabled for this stream")
        return tuple(self._cells)

    def copy(self) -> "RskStream":
        other = RskStream.__new__(RskStream)
        other.k = self.k
        other._rows = [row[:] for row in self._rows]
        other._cells = None if self._cells is None else self._cells[:]
        other._history = None if self._history is None else self._history[:]
        other._history_limit = self._history_limit
        other._n = self._n
        return other

    def push(self, letter: int) -> ShapeEvent:
        """Insert one letter; returns the step's growth event.

        Raises ValueError, leaving the state untouched, if the letter is
        outside the alphabet.
        """
        event, _ = self.push_trace(letter)
        return event

    def push_trace(self, letter: int) -> tuple[ShapeEvent, tuple[int, ...]]:
        """Insert one letter, also returning its bump chain.

        Entry r of the chain (0-based) is the value that landed in row r+1:
        the letter itself, then whatever each row bumped downward.  The chain
        ends at the row that gained the new cell.
        """
        if not 1 <= letter <= self.k:
            raise ValueError(f"letter {letter} outside alphabet 1..{self.k}")
        rows = self._rows
        chain = [letter]
        x = letter
        r = 0
        nrows = len(rows)
        while r < nrows:
            row = rows[r]
            if x >= row[-1]:
                row.append(x)
                col = len(row)
                break
            pos = bisect_right(row, x)
            x, row[pos] = row[pos], x
            chain.append(x)
            r += 1
        else:
            rows.append([x])
            col = 1
        self._n += 1
        if self._cells is not None:
            self._cells.append((r + 1, col))
        shape = tuple(len(row) for row in rows)
        history = self._history
        if history is not None:
            history.append(shape)
            limit = self._history_limit
            if limit is not None and len(history) > limit:
                del history[0]
        return ShapeEvent(self._n, r + 1, shape), tuple(chain)

    def push_quiet(self, letter: int) -> list[int]:
        """Insert one letter with no event or history bookkeeping.

        Returns only the bump chain; meant for long coupled runs where the
        caller tracks its own statistics.  Requires history to be disabled
        (``history_limit=0``) so no retained view can go stale.
        """
        if not 1 <= letter <= self.k:
            raise ValueError(f"letter {letter} outside alphabet 1..{self.k}")
        if self._history is not None:
            raise ValueError("push_quiet needs history_limit=0")
        rows = self._rows
        chain = [letter]
        x = letter
        r = 0
        nrows = len(rows)
        while r < nrows:
            row = rows[r]
            if x >= row[-1]:
                row.append(x)
                col = len(row)
                break
            pos = bisect_right(row, x)
            x, row[pos] = row[pos], x
            chain.append(x)
            r += 1
        else:
            rows.append([x])
            col = 1
        self._n += 1
        if self._cells is not None:
            self._cells.append((r + 1, col))
        return chain

    def extend(self, letters) -> None:
        for letter in letters:
            self.push(letter)

    def m_count(self, letter: int) -> int:
        """Multiplicity of ``letter`` in the first row of the insertion tableau.

        Defined for letters 2..k: the smallest letter is never bumped out of
        the first row, so its count is not a useful vanishing statistic.
        """
        if not 2 <= letter <= self.k:
            raise ValueError(f"letter must be in 2..{self.k}, got {letter}")
        if not self._rows:
            return 0
        row = self._rows[0]
        return bisect_right(row, letter) - bisect_left(row, letter)

    def first_row_predecessor(self, letter: int) -> int:
        """Greatest first-row entry strictly below ``letter``, or 1 if none."""
        if not 2 <= letter <= self.k:
            raise ValueError(f"letter must be in 2..{self.k}, got {letter}")
        if not self._rows:
            return 1
        row = self._rows[0]
        pos = bisect_left(row, letter)
        return row[pos - 1] if pos else 1

    def weyl_coordinate(self) -> tuple[int, ...]:
        """Current shape padded with zeros to k coordinates."""
        shape = self.shape
        return shape + (0,) * (self.k - len(shape))

    @property
    def j(self) -> int:
        """Difference of the two row lengths (two-letter alphabets only)."""
        if self.k != 2:
            raise ValueError("j is defined for two-letter alphabets")
        rows = self._rows
        top = len(rows[0]) if rows else 0
        bottom = len(rows[1]) if len(rows) > 1 else 0
        return top - bottom

    def snapshot(self) -> RskPair:
        """Materialize the insertion/recording pair for the consumed prefix."""
        if self._cells is None:
            raise ValueError("cell recording is disabled; snapshot unavailable")
        q_rows: list[list[int]] = []
        for step, (r, c) in enumerate(self._cells, start=1):
            if r - 1 == len(q_rows):
                q_rows.append([])
            assert c == len(q_rows[r - 1]) + 1
            q_rows[r - 1].append(step)
        return RskPair(SemistandardTableau(self._rows), StandardTableau(q_rows))

    def recording_tableau(self) -> StandardTableau:
        return self.snapshot().q
