from itertools import permutations

import pytest

from oracles import position_descent_count
from permtab import (
    BoundaryWord,
    Permutation,
    PermutationTableau,
    column_count,
    descent_set,
    enumerate_tableaux,
    restricted_zeros,
    rightmost_restricted_zeros,
    row_count,
    topmost_one,
    unrestricted_rows,
)
from permtab.errors import NoSuchColumn
from permtab.statistics import descent_positions


@pytest.mark.parametrize("word, expected", [
    ((2, 4, 8, 5, 1, 6, 3, 7), {5, 6, 8}),
    ((8, 5, 4, 7, 2, 3, 1, 6), {3, 5, 7, 8}),
    ((1, 2, 3, 4), set()),
])
def test_descent_set(word, expected):
    assert descent_set(Permutation(word)) == expected


def test_descent_positions_differ_from_values():
    assert descent_positions(Permutation((2, 4, 8, 5, 1, 6, 3, 7))) == (3, 4, 6)


@pytest.mark.parametrize("n", range(1, 9))
def test_descent_counts_agree(n):
    for w in permutations(range(1, n + 1)):
        d = descent_set(Permutation(w))
        assert len(d) == position_descent_count(w)
        assert 1 not in d and d <= set(range(2, n + 1))


def test_restricted_zeros(fig1, fig2):
    assert restricted_zeros(fig1) == [(4, 8), (2, 8)]
    assert set(restricted_zeros(fig2)) == {(2, 3), (2, 7), (2, 8), (4, 7), (4, 8)}


def test_restricted_zeros_none():
    t = PermutationTableau.from_rows("SWW", {1: "11"})
    assert restricted_zeros(t) == []


def test_unrestricted_rows(fig1, fig2):
    assert unrestricted_rows(fig1) == [1, 3, 7]
    assert unrestricted_rows(fig2) == [1, 6]
    assert unrestricted_rows(PermutationTableau(BoundaryWord("SSS"), ())) == [1, 2, 3]


def test_rightmost_restricted_zeros(fig1, fig2):
    assert rightmost_restricted_zeros(fig1) == {2: (2, 8), 4: (4, 8)}
    assert rightmost_restricted_zeros(fig2) == {2: (2, 3), 4: (4, 7)}
    assert rightmost_restricted_zeros(PermutationTableau.from_rows("SW", {1: "1"})) == {}


def test_topmost_one(fig1, fig2):
    assert topmost_one(fig1, 6) == 3
    assert topmost_one(fig2, 5) == 4
    assert topmost_one(PermutationTableau.from_rows("SW", {1: "1"}), 2) == 1
    with pytest.raises(NoSuchColumn):
        topmost_one(fig1, 4)


def test_counts(fig1, fig2):
    assert (column_count(fig1), row_count(fig1)) == (3, 5)
    assert (column_count(fig2), row_count(fig2)) == (4, 4)
    empty = PermutationTableau(BoundaryWord("SSS"), ())
    assert (column_count(empty), row_count(empty)) == (0, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_row_invariants_over_all_tableaux(n):
    for t in enumerate_tableaux(n):
        free = unrestricted_rows(t)
        restricted = rightmost_restricted_zeros(t)
        assert not set(free) & set(restricted)
        assert set(free) | set(restricted) == set(t.rows)
        assert 1 in free
        for j in t.columns:
            assert t[topmost_one(t, j), j] == 1
        assert column_count(t) + row_count(t) == t.n
