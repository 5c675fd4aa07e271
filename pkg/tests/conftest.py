import sys
from pathlib import Path

import pytest

from permtab import PermutationTableau

sys.path.insert(0, str(Path(__file__).parent))

FIG1_PERM = (2, 4, 8, 5, 1, 6, 3, 7)
FIG2_PERM = (8, 5, 4, 7, 2, 3, 1, 6)
FIG1_ROWS = {1: "101", 2: "001", 3: "111", 4: "011", 7: "1"}
FIG2_ROWS = {1: "1101", 2: "0000", 4: "001", 6: "11"}

FIG1_DOC = """permutation-tableau v1
steps SSSSWWSW
row 1 101
row 2 001
row 3 111
row 4 011
row 7 1
end
"""

FIG2_DOC = """permutation-tableau v1
steps SSWSWSWW
row 1 1101
row 2 0000
row 4 001
row 6 11
end
"""


@pytest.fixture
def fig1():
    return PermutationTableau.from_rows("SSSSWWSW", FIG1_ROWS)


@pytest.fixture
def fig2():
    return PermutationTableau.from_rows("SSWSWSWW", FIG2_ROWS)


# acceptance criteria bookkeeping: one pass/fail line per criterion
_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    passed = call.excinfo is None
    prev = _criteria.get(number, (title, True))
    _criteria[number] = (title, prev[1] and passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, passed = _criteria[number]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {number}: {title}")
