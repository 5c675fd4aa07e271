"""
Permutations, boundary words and permutation tableaux.

A tableau shape is stored as its boundary word: the sequence of South/West
steps read from the top-right corner to the bottom-left corner.  Step ``k`` is
labelled ``k``; South steps label rows and West steps label columns.  The cell
``(i, j)`` sits in row ``i`` and column ``j`` and exists exactly when ``i < j``.
Smaller row labels are higher up, larger column labels are further west.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence

from permtab.errors import (
    CellOutOfShape,
    DuplicateValue,
    IncompleteFilling,
    InvalidBoundary,
    InvalidDescentSet,
    InvalidTableau,
    ValueOutOfRange,
)

SOUTH = "S"
WEST = "W"


class Cell(NamedTuple):
    """Address of a tableau cell by its row label ``i`` and column label ``j``."""

    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1..n}`` in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise ValueOutOfRange("a permutation needs at least one entry")
        n = len(word)
        seen: set[int] = set()
        for value in word:
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueOutOfRange(f"entry {value!r} is not an integer")
            if value < 1 or value > n:
                raise ValueOutOfRange(f"entry {value} is outside 1..{n}")
            if value in seen:
                raise DuplicateValue(f"entry {value} occurs more than once")
            seen.add(value)

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __call__(self, position: int) -> int:
        """Value at 1-based ``position``."""
        return self.word[position - 1]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.word)) + ")"


def make_permutation(word: Iterable[int]) -> Permutation:
    return Permutation(tuple(word))


@dataclass(frozen=True)
class BoundaryWord:
    """South/West step sequence of a tableau shape, step 1 first."""

    steps: str

    def __post_init__(self) -> None:
        steps = self.steps
        if not isinstance(steps, str):
            steps = "".join(steps)
            object.__setattr__(self, "steps", steps)
        if not steps:
            raise InvalidBoundary("a boundary word needs at least one step")
        bad = set(steps) - {SOUTH, WEST}
        if bad:
            raise InvalidBoundary(f"unknown step symbols {sorted(bad)}")
        if steps[0] != SOUTH:
            # a leading West step would be a column without cells
            raise InvalidBoundary("the first step must be South")

    @property
    def n(self) -> int:
        return len(self.steps)

    @cached_property
    def rows(self) -> tuple[int, ...]:
        return tuple(k for k, s in enumerate(self.steps, 1) if s == SOUTH)

    @cached_property
    def columns(self) -> tuple[int, ...]:
        return tuple(k for k, s in enumerate(self.steps, 1) if s == WEST)

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return _cells(self.steps)

    @cached_property
    def cell_index(self) -> dict[Cell, int]:
        return {cell: k for k, cell in enumerate(self.cells)}

    def row_cells(self, i: int) -> tuple[Cell, ...]:
        """Cells of row ``i`` from west to east."""
        return tuple(Cell(i, j) for j in reversed(self.columns) if j > i)

    def column_cells(self, j: int) -> tuple[Cell, ...]:
        """Cells of column ``j`` from top to bottom."""
        return tuple(Cell(i, j) for i in self.rows if i < j)

    def __str__(self) -> str:
        return self.steps


@lru_cache(maxsize=4096)
def _cells(steps: str) -> tuple[Cell, ...]:
    rows = [k for k, s in enumerate(steps, 1) if s == SOUTH]
    cols = [k for k, s in enumerate(steps, 1) if s == WEST]
    return tuple(Cell(i, j) for j in cols for i in reversed(rows) if i < j)


def boundary_from_descents(n: int, descents: Iterable[int]) -> BoundaryWord:
    """West step at every label in ``descents``, South elsewhere."""
    if n < 1:
        raise InvalidDescentSet(f"size must be positive, got {n}")
    labels = set(descents)
    outside = sorted(d for d in labels if not 1 <= d <= n)
    if outside:
        raise InvalidDescentSet(f"labels {outside} are outside 1..{n}")
    if 1 in labels:
        raise InvalidDescentSet("1 can never be a descent")
    return BoundaryWord("".join(WEST if k in labels else SOUTH for k in range(1, n + 1)))


def cells_of(shape: BoundaryWord) -> list[Cell]:
    """All cells, by column label ascending then row label descending."""
    return list(shape.cells)


class ColumnAllZero(NamedTuple):
    j: int

    def __str__(self) -> str:
        return f"ColumnAllZero({self.j})"


class ForbiddenPattern(NamedTuple):
    """A zero at ``cell`` with a one at ``(above, cell.j)`` and at ``(cell.i, left)``."""

    cell: Cell
    above: int
    left: int

    def __str__(self) -> str:
        i, j = self.cell
        return f"ForbiddenPattern({self.cell} above ({self.above},{j}) left ({i},{self.left}))"


Violation = ColumnAllZero | ForbiddenPattern


@dataclass(frozen=True)
class ValidityReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        return "\n".join(str(v) for v in self.violations)


def _normalize_filling(shape: BoundaryWord, filling: Mapping) -> dict[Cell, int]:
    index = shape.cell_index
    out: dict[Cell, int] = {}
    for key, value in filling.items():
        cell = Cell(*key)
        if cell not in index:
            raise CellOutOfShape(f"cell {cell} is not a cell of shape {shape}")
        if value not in (0, 1):
            raise ValueError(f"cell {cell} holds {value!r}, expected 0 or 1")
        out[cell] = int(value)
    missing = [c for c in shape.cells if c not in out]
    if missing:
        raise IncompleteFilling("no value for cells " + " ".join(map(str, missing)))
    return out


def validate_tableau(shape: BoundaryWord, filling: Mapping) -> ValidityReport:
    """Check both tableau axioms.

    Column violations come first (column ascending), then forbidden patterns
    in canonical cell order.  A forbidden pattern names the topmost one above
    the zero and the nearest one to its west.
    """
    bits = _normalize_filling(shape, filling)
    all_zero = [ColumnAllZero(j) for j in shape.columns
                if not any(bits[c] for c in shape.column_cells(j))]

    topmost: dict[int, int] = {}
    for c in shape.cells:
        if bits[c]:
            topmost[c.j] = min(topmost.get(c.j, c.i), c.i)
    nearest_west: dict[Cell, int] = {}
    for i in shape.rows:
        seen = None
        for c in shape.row_cells(i):
            if seen is not None:
                nearest_west[c] = seen
            if bits[c]:
                seen = c.j

    patterns = []
    for c in shape.cells:
        if bits[c] == 0 and c in nearest_west and topmost.get(c.j, c.i) < c.i:
            patterns.append(ForbiddenPattern(c, topmost[c.j], nearest_west[c]))
    return ValidityReport(tuple(all_zero) + tuple(patterns))


@dataclass(frozen=True)
class PermutationTableau:
    """A boundary word with a valid 0/1 filling.

    ``bits`` follows the canonical cell order of :func:`cells_of`.  Every
    instance is checked against both axioms on construction.
    """

    shape: BoundaryWord
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if len(self.bits) != len(self.shape.cells):
            raise IncompleteFilling(
                f"shape {self.shape} has {len(self.shape.cells)} cells, got {len(self.bits)} bits")
        report = validate_tableau(self.shape, self.filling)
        if not report.ok:
            raise InvalidTableau(report)

    @classmethod
    def from_filling(cls, shape: BoundaryWord, filling: Mapping) -> PermutationTableau:
        bits = _normalize_filling(shape, filling)
        return cls(shape, tuple(bits[c] for c in shape.cells))

    @classmethod
    def from_rows(cls, steps: str, rows: Mapping[int, str]) -> PermutationTableau:
        """Build from row bit strings written west to east, e.g. ``{1: "101"}``."""
        shape = BoundaryWord(steps)
        filling = {}
        for i, text in rows.items():
            cells = shape.row_cells(i)
            if len(cells) != len(text):
                raise IncompleteFilling(f"row {i} has {len(cells)} cells, got {text!r}")
            filling.update(zip(cells, (int(ch) for ch in text)))
        return cls.from_filling(shape, filling)

    @cached_property
    def filling(self) -> dict[Cell, int]:
        return dict(zip(self.shape.cells, self.bits))

    def __getitem__(self, cell: Sequence[int]) -> int:
        return self.filling[Cell(*cell)]

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def rows(self) -> tuple[int, ...]:
        return self.shape.rows

    @property
    def columns(self) -> tuple[int, ...]:
        return self.shape.columns

    def row_bits(self, i: int) -> str:
        return "".join(str(self.filling[c]) for c in self.shape.row_cells(i))


def tableau_length(tableau: PermutationTableau) -> int:
    """Half perimeter of the shape, i.e. the number of boundary steps."""
    return tableau.shape.n
