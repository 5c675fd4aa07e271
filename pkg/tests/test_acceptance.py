"""Exit criteria. Each test carries a ``criterion`` marker; a PASS/FAIL line per
criterion is printed in the terminal summary."""

import io
import time

import pytest

from conftest import FIG1_DOC, FIG1_PERM, FIG2_DOC, FIG2_PERM
from oracles import brute_eulerian_row, naive_violations, report_as_set
from permtab import (
    enumerate_permutations,
    enumerate_tableaux,
    eulerian,
    parse_tableau,
    perm_to_tableau,
    rightmost_restricted_zeros,
    serialize_tableau,
    tableau_to_perm,
    unrestricted_rows,
    validate_tableau,
)
from permtab.cli import main
from permtab.statistics import descent_set

criterion = pytest.mark.criterion
SIZES = range(1, 8)


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


@criterion(1, "golden forward, Example 1")
def test_golden_forward_example1():
    code, out = run(["to-tableau", "2,4,8,5,1,6,3,7"])
    assert code == 0
    assert out == FIG1_DOC
    assert "steps SSSSWWSW" in out
    assert [line.split()[2] for line in out.splitlines() if line.startswith("row ")] == [
        "101", "001", "111", "011", "1"]
    best = min(_timed(lambda: run(["to-tableau", "2,4,8,5,1,6,3,7"])) for _ in range(20))
    assert best < 0.010


def _timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


@criterion(2, "golden forward, Example 2")
def test_golden_forward_example2():
    code, out = run(["to-tableau", "8,5,4,7,2,3,1,6"])
    assert code == 0
    assert out == FIG2_DOC
    assert [line.split()[2] for line in out.splitlines() if line.startswith("row ")] == [
        "1101", "0000", "001", "11"]


@criterion(3, "golden inverse with insertion order")
@pytest.mark.parametrize("doc, perm, order", [
    (FIG1_DOC, FIG1_PERM, [8, 6, 5]),
    (FIG2_DOC, FIG2_PERM, [8, 7, 5, 3]),
])
def test_golden_inverse(doc, perm, order):
    code, out = run(["to-perm", "--trace"], doc)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "(" + ",".join(map(str, perm)) + ")"
    columns = []
    for line in lines[2:]:
        column = int(line.split()[1].rstrip(":"))
        if not columns or columns[-1] != column:
            columns.append(column)
    assert columns == order


@criterion(4, "exhaustive round trips and image-set bijectivity, n <= 7")
def test_exhaustive_round_trip():
    start = time.perf_counter()
    for n in SIZES:
        images = set()
        for p in enumerate_permutations(n):
            t, _ = perm_to_tableau(p)
            assert tableau_to_perm(t) == p
            images.add(t)
        tableaux = list(enumerate_tableaux(n))
        for t in tableaux:
            assert perm_to_tableau(tableau_to_perm(t))[0] == t
        assert images == set(tableaux)
        assert len(images) == len(tableaux)
    assert time.perf_counter() - start < 30


@criterion(5, "column counts = descent counts = Eulerian numbers, n <= 7")
def test_theorem_counting():
    start = time.perf_counter()
    for n in SIZES:
        by_tableaux = [0] * n
        for t in enumerate_tableaux(n):
            by_tableaux[len(t.columns)] += 1
        by_descents = [0] * n
        for p in enumerate_permutations(n):
            by_descents[len(descent_set(p))] += 1
        by_recurrence = [eulerian(n, k) for k in range(n)]
        assert by_tableaux == by_descents == by_recurrence
    assert [eulerian(4, k) for k in range(4)] == [1, 11, 11, 1] == brute_eulerian_row(4)
    assert time.perf_counter() - start < 30


@criterion(6, "statistics golden values for both figures")
def test_statistics_golden():
    fig1, fig2 = parse_tableau(FIG1_DOC), parse_tableau(FIG2_DOC)
    assert unrestricted_rows(fig1) == [1, 3, 7]
    assert set(rightmost_restricted_zeros(fig1).values()) == {(2, 8), (4, 8)}
    assert unrestricted_rows(fig2) == [1, 6]
    assert set(rightmost_restricted_zeros(fig2).values()) == {(2, 3), (4, 7)}


@criterion(7, "final working word = unrestricted rows, n <= 7")
def test_terminal_word():
    for n in SIZES:
        for p in enumerate_permutations(n):
            t, trace = perm_to_tableau(p)
            assert list(trace.final_word) == unrestricted_rows(t)


@criterion(8, "single-bit mutants of both figures agree with the naive oracle")
@pytest.mark.parametrize("doc", [FIG1_DOC, FIG2_DOC], ids=["fig1", "fig2"])
def test_validator_mutations(doc):
    t = parse_tableau(doc)
    assert len(t.shape.cells) == 13
    for cell in t.shape.cells:
        filling = dict(t.filling)
        filling[cell] ^= 1
        report = validate_tableau(t.shape, filling)
        assert report_as_set(report) == naive_violations(t.shape.steps, filling)


@criterion(9, "serialize/parse round trip, length <= 7")
def test_serialization_round_trip():
    for n in SIZES:
        for t in enumerate_tableaux(n):
            text = serialize_tableau(t)
            back = parse_tableau(text)
            assert back == t
            assert serialize_tableau(back) == text
