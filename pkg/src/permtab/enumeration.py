"""Exhaustive generators and the counting checks behind the descent/column correspondence."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional

from permtab.core import SOUTH, WEST, BoundaryWord, Permutation, PermutationTableau
from permtab.errors import LimitExceeded, OutOfRange
from permtab.statistics import descent_set


@dataclass(frozen=True)
class Limits:
    permutations: int = 12
    tableaux: int = 10


DEFAULT_LIMITS = Limits()


def _check(n: int, limit: int, what: str) -> None:
    if not isinstance(n, int) or n < 1:
        raise LimitExceeded(f"{what} size must be a positive integer, got {n!r}")
    if n > limit:
        raise LimitExceeded(f"{what} enumeration is limited to n <= {limit}, got {n}")


def enumerate_permutations(n: int, limits: Limits = DEFAULT_LIMITS) -> Iterator[Permutation]:
    """All permutations of ``{1..n}`` in lexicographic order."""
    _check(n, limits.permutations, "permutation")
    for word in permutations(range(1, n + 1)):
        yield Permutation(word)


def boundary_words(n: int) -> Iterator[BoundaryWord]:
    """Words with first step South, ordered as binary numbers (W=1, step 1 most significant)."""
    for x in range(1 << (n - 1)):
        tail = "".join(WEST if (x >> (n - 2 - k)) & 1 else SOUTH for k in range(n - 1))
        yield BoundaryWord(SOUTH + tail)


@lru_cache(maxsize=2048)
def _masks(steps: str) -> tuple[tuple[int, ...], tuple[tuple[int, int, int], ...]]:
    """Column masks and, per cell, (bit, cells-above mask, cells-west mask).

    Bit ``k`` of a filling mask holds the value of canonical cell ``k``.
    """
    shape = BoundaryWord(steps)
    index = shape.cell_index
    columns = tuple(sum(1 << index[c] for c in shape.column_cells(j)) for j in shape.columns)
    checks = []
    for c, k in index.items():
        above = sum(1 << index[a] for a in shape.column_cells(c.j) if a.i < c.i)
        west = sum(1 << index[w] for w in shape.row_cells(c.i) if w.j > c.j)
        if above and west:
            checks.append((1 << k, above, west))
    return columns, tuple(checks)


def _valid_masks(steps: str) -> Iterator[int]:
    columns, checks = _masks(steps)
    m = len(BoundaryWord(steps).cells)
    for mask in range(1 << m):
        if not all(mask & col for col in columns):
            continue
        if any(not mask & bit and mask & above and mask & west for bit, above, west in checks):
            continue
        yield mask


def _count_shape(steps: str) -> int:
    return sum(1 for _ in _valid_masks(steps))


def enumerate_tableaux(n: int, k: Optional[int] = None,
                       limits: Limits = DEFAULT_LIMITS) -> Iterator[PermutationTableau]:
    """Every valid tableau of length ``n`` (with ``k`` columns if given), by brute force."""
    _check(n, limits.tableaux, "tableau")
    for shape in boundary_words(n):
        if k is not None and len(shape.columns) != k:
            continue
        m = len(shape.cells)
        for mask in _valid_masks(shape.steps):
            yield PermutationTableau(shape, tuple((mask >> b) & 1 for b in range(m)))


@lru_cache(maxsize=None)
def eulerian(n: int, k: int) -> int:
    """Number of permutations of ``{1..n}`` with ``k`` descents."""
    if n < 1 or not 0 <= k < n:
        raise OutOfRange(f"eulerian({n}, {k}) needs 0 <= k < n")
    if n == 1:
        return 1
    total = 0
    if k < n - 1:
        total += (k + 1) * eulerian(n - 1, k)
    if k > 0:
        total += (n - k) * eulerian(n - 1, k - 1)
    return total


def eulerian_row(n: int) -> tuple[int, ...]:
    return tuple(eulerian(n, k) for k in range(n))


def tableau_counts(n: int, workers: Optional[int] = None,
                   limits: Limits = DEFAULT_LIMITS) -> tuple[int, ...]:
    """Valid tableaux of length ``n`` per column count, without building objects."""
    _check(n, limits.tableaux, "tableau")
    shapes = [s.steps for s in boundary_words(n)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(_count_shape, shapes, chunksize=8))
    else:
        counts = [_count_shape(s) for s in shapes]
    table = [0] * n
    for steps, c in zip(shapes, counts):
        table[steps.count(WEST)] += c
    return tuple(table)


def descent_counts(n: int, limits: Limits = DEFAULT_LIMITS) -> tuple[int, ...]:
    table = [0] * n
    for p in enumerate_permutations(n, limits):
        table[len(descent_set(p))] += 1
    return tuple(table)


@dataclass(frozen=True)
class CountTable:
    n: int
    by_columns: tuple[int, ...]

    def __post_init__(self) -> None:
        if sum(self.by_columns) != math.factorial(self.n):
            raise ValueError(f"counts {self.by_columns} do not sum to {self.n}!")


class CountMismatch(AssertionError):
    pass


def count_table(n: int, workers: Optional[int] = None,
                limits: Limits = DEFAULT_LIMITS) -> CountTable:
    tableaux = tableau_counts(n, workers, limits)
    perms = descent_counts(n, limits)
    if tableaux != perms:
        raise CountMismatch(f"n={n}: tableaux {tableaux} vs permutations {perms}")
    return CountTable(n, tableaux)
