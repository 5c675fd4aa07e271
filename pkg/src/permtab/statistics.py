"""Descents of permutations and the row/column statistics of tableaux.

Descents here are *values*: ``d`` is a descent when ``d`` is immediately
followed by a smaller entry.  Most libraries report positions instead; use
:func:`descent_positions` for those.
"""

from __future__ import annotations

from permtab.core import Cell, Permutation, PermutationTableau
from permtab.errors import NoSuchColumn


def descent_set(p: Permutation) -> frozenset[int]:
    w = p.word
    return frozenset(w[k] for k in range(len(w) - 1) if w[k] > w[k + 1])


def descent_positions(p: Permutation) -> tuple[int, ...]:
    """1-based positions ``k`` with ``p(k) > p(k+1)``."""
    w = p.word
    return tuple(k + 1 for k in range(len(w) - 1) if w[k] > w[k + 1])


def restricted_zeros(t: PermutationTableau) -> list[Cell]:
    """Zeros with a one above them in the same column, in canonical cell order."""
    out = []
    for j in t.columns:
        seen_one = False
        for c in t.shape.column_cells(j):
            if t.filling[c]:
                seen_one = True
            elif seen_one:
                out.append(c)
    out.sort(key=t.shape.cell_index.__getitem__)
    return out


def unrestricted_rows(t: PermutationTableau) -> list[int]:
    restricted = {c.i for c in restricted_zeros(t)}
    return [i for i in t.rows if i not in restricted]


def rightmost_restricted_zeros(t: PermutationTableau) -> dict[int, Cell]:
    """Row label -> its easternmost restricted zero (smallest column label)."""
    out: dict[int, Cell] = {}
    for c in restricted_zeros(t):
        if c.i not in out or c.j < out[c.i].j:
            out[c.i] = c
    return dict(sorted(out.items()))


def rightmost_restricted_zeros_by_column(t: PermutationTableau) -> dict[int, list[int]]:
    """Column label -> ascending row labels whose rightmost restricted zero is in it."""
    out: dict[int, list[int]] = {j: [] for j in t.columns}
    for i, c in rightmost_restricted_zeros(t).items():
        out[c.j].append(i)
    for rows in out.values():
        rows.sort()
    return out


def topmost_one(t: PermutationTableau, j: int) -> int:
    if j not in t.columns:
        raise NoSuchColumn(f"{j} is not a column label of {t.shape}")
    for c in t.shape.column_cells(j):
        if t.filling[c]:
            return c.i
    raise AssertionError(f"column {j} has no one")  # excluded by validation


def column_count(t: PermutationTableau) -> int:
    return len(t.columns)


def row_count(t: PermutationTableau) -> int:
    return len(t.rows)
