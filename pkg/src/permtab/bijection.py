"""
Descent-preserving bijection between permutations and permutation tableaux.

Forward: draw a West step for every descent value, then repeatedly take the
eastmost-southmost empty cell ``(i, j)`` and compare ``i`` and ``j`` in the
current working word (which shrinks as labels are deleted):

* not adjacent       -> put a one in ``(i, j)``;
* ``i`` right before ``j`` -> zero the empty cells of row ``i``, delete ``i``;
* ``j`` right before ``i`` -> one in ``(i, j)``, zero the empty cells of
  column ``j``, delete ``j``.

Inverse: start from the unrestricted rows in increasing order and, column by
column from west to east, insert ``j`` before its topmost one and the rows
whose rightmost restricted zero lies in ``j`` before ``j``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from permtab.core import (
    BoundaryWord,
    Cell,
    Permutation,
    PermutationTableau,
    boundary_from_descents,
)
from permtab.errors import InsertionTargetMissing, InternalInvariantViolation, InvalidTableau
from permtab.statistics import (
    descent_set,
    rightmost_restricted_zeros_by_column,
    topmost_one,
    unrestricted_rows,
)


class FillCase(str, enum.Enum):
    NOT_ADJACENT = "NotAdjacent"
    ROW_FILL = "RowFill"
    COLUMN_FILL = "ColumnFill"


def _fmt_word(word) -> str:
    return "(" + ",".join(map(str, word)) + ")"


@dataclass(frozen=True)
class FillEvent:
    cell: Cell
    value: int
    case: FillCase
    deleted: Optional[int]
    word_after: tuple[int, ...]

    def __str__(self) -> str:
        parts = [f"cell {self.cell} <- {self.value} {self.case.value}"]
        if self.deleted is not None:
            parts.append(f"delete {self.deleted}")
        parts.append(f"word: {_fmt_word(self.word_after)}")
        return " ".join(parts)


@dataclass(frozen=True)
class FillTrace:
    start: tuple[int, ...]
    events: tuple[FillEvent, ...]

    @property
    def final_word(self) -> tuple[int, ...]:
        return self.events[-1].word_after if self.events else self.start

    def __iter__(self):
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)

    def __str__(self) -> str:
        return "\n".join(map(str, self.events))


@dataclass(frozen=True)
class InsertEvent:
    column: int
    inserted: tuple[int, ...]
    before: int
    word_after: tuple[int, ...]

    def __str__(self) -> str:
        labels = ",".join(map(str, self.inserted))
        return (f"column {self.column}: insert {labels} before {self.before} "
                f"word: {_fmt_word(self.word_after)}")


@dataclass(frozen=True)
class InsertTrace:
    start: tuple[int, ...]
    events: tuple[InsertEvent, ...]

    def __str__(self) -> str:
        lines = [f"start word: {_fmt_word(self.start)}"]
        lines.extend(map(str, self.events))
        return "\n".join(lines)


def next_unfilled_cell(shape: BoundaryWord, filled) -> Optional[Cell]:
    """Eastmost column first, then southmost row: the first empty canonical cell."""
    for cell in shape.cells:
        if cell not in filled:
            return cell
    return None


def _position(word: list[int], label: int, cell: Cell) -> int:
    try:
        return word.index(label)
    except ValueError:
        raise InternalInvariantViolation(
            f"label {label} missing from working word {word} at cell {cell}") from None


def perm_to_tableau(p: Permutation) -> tuple[PermutationTableau, FillTrace]:
    shape = boundary_from_descents(p.n, descent_set(p))
    word = list(p.word)
    filled: dict[Cell, int] = {}
    events: list[FillEvent] = []
    deleted: set[int] = set()

    def delete(label: int) -> None:
        if label in deleted:
            raise InternalInvariantViolation(f"label {label} deleted twice")
        deleted.add(label)
        word.remove(label)

    iterations = 0
    while (cell := next_unfilled_cell(shape, filled)) is not None:
        iterations += 1
        if iterations > len(shape.cells):
            raise InternalInvariantViolation("forward loop did not make progress")
        i, j = cell
        pi, pj = _position(word, i, cell), _position(word, j, cell)
        if abs(pi - pj) != 1:
            filled[cell] = 1
            events.append(FillEvent(cell, 1, FillCase.NOT_ADJACENT, None, tuple(word)))
        elif pi < pj:
            zeroed = [c for c in shape.row_cells(i)[::-1] if c not in filled]
            delete(i)
            for c in zeroed:
                filled[c] = 0
                events.append(FillEvent(c, 0, FillCase.ROW_FILL, i, tuple(word)))
        else:
            zeroed = [c for c in shape.column_cells(j)[::-1] if c not in filled and c != cell]
            if any(c.i >= i for c in zeroed):
                raise InternalInvariantViolation(f"column fill at {cell} reaches below it")
            delete(j)
            filled[cell] = 1
            events.append(FillEvent(cell, 1, FillCase.COLUMN_FILL, j, tuple(word)))
            for c in zeroed:
                filled[c] = 0
                events.append(FillEvent(c, 0, FillCase.COLUMN_FILL, j, tuple(word)))

    try:
        tableau = PermutationTableau.from_filling(shape, filled)
    except InvalidTableau as exc:
        raise InternalInvariantViolation(f"forward image of {p} is not a tableau: {exc}") from exc
    if word != unrestricted_rows(tableau):
        raise InternalInvariantViolation(
            f"final word {word} differs from unrestricted rows {unrestricted_rows(tableau)}")
    if not set(tableau.columns) <= deleted:
        raise InternalInvariantViolation("a column label survived the forward pass")
    return tableau, FillTrace(p.word, tuple(events))


def tableau_to_perm_traced(t: PermutationTableau) -> tuple[Permutation, InsertTrace]:
    start = unrestricted_rows(t)
    word = list(start)
    blocks = rightmost_restricted_zeros_by_column(t)
    events: list[InsertEvent] = []

    def insert(labels: list[int], before: int, column: int) -> None:
        try:
            at = word.index(before)
        except ValueError:
            raise InsertionTargetMissing(
                f"column {column}: {before} is not in the working word {word}") from None
        word[at:at] = labels
        events.append(InsertEvent(column, tuple(labels), before, tuple(word)))

    for j in reversed(t.columns):
        insert([j], topmost_one(t, j), j)
        if blocks[j]:
            insert(blocks[j], j, j)

    perm = Permutation(tuple(word))
    if descent_set(perm) != frozenset(t.columns):
        raise InternalInvariantViolation(
            f"descents of {perm} differ from the columns of {t.shape}")
    return perm, InsertTrace(tuple(start), tuple(events))


def tableau_to_perm(t: PermutationTableau) -> Permutation:
    return tableau_to_perm_traced(t)[0]
