"""
Text formats for tableaux and permutations.

A tableau document looks like::

    permutation-tableau v1
    steps SSSSWWSW
    row 1 101
    row 2 001
    row 3 111
    row 4 011
    row 7 1
    end

Row bits run west to east (decreasing column label); an empty row is ``-``.
"""

from __future__ import annotations

import re

from permtab.core import BoundaryWord, Cell, Permutation, PermutationTableau, validate_tableau
from permtab.errors import AxiomViolation, InvalidBoundary, ShapeMismatch, TableauSyntaxError

HEADER = "permutation-tableau v1"
_HEADER_PREFIX = "permutation-tableau "
_ROW = re.compile(r"row ([1-9][0-9]*) ([01]+|-)")
_STEPS = re.compile(r"steps ([SW]+)")


def serialize_tableau(t: PermutationTableau) -> str:
    lines = [HEADER, f"steps {t.shape.steps}"]
    for i in t.rows:
        lines.append(f"row {i} {t.row_bits(i) or '-'}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def is_document(text: str) -> bool:
    return text.lstrip().startswith(_HEADER_PREFIX)


def parse_document(text: str) -> tuple[BoundaryWord, dict[Cell, int]]:
    """Parse the layout of a document without checking the tableau axioms."""
    if "\t" in text:
        raise TableauSyntaxError("tabs are not allowed")
    if text.endswith("\n"):
        text = text[:-1]
    lines = text.split("\n")
    if not lines or lines[0] != HEADER:
        if lines and lines[0].startswith(_HEADER_PREFIX):
            raise TableauSyntaxError(f"unsupported version: {lines[0]!r}")
        raise TableauSyntaxError(f"expected header {HEADER!r}")
    if len(lines) < 3:
        raise TableauSyntaxError("document is truncated")
    m = _STEPS.fullmatch(lines[1])
    if not m:
        raise TableauSyntaxError(f"line 2: expected 'steps <S|W...>', got {lines[1]!r}")
    try:
        shape = BoundaryWord(m.group(1))
    except InvalidBoundary as exc:
        raise ShapeMismatch(str(exc)) from exc
    if lines[-1] != "end":
        raise TableauSyntaxError("last line must be 'end'")

    body = lines[2:-1]
    rows = []
    for lineno, line in enumerate(body, 3):
        rm = _ROW.fullmatch(line)
        if not rm:
            raise TableauSyntaxError(f"line {lineno}: expected 'row <label> <bits>', got {line!r}")
        rows.append((int(rm.group(1)), rm.group(2)))
    labels = [i for i, _ in rows]
    if labels != list(shape.rows):
        raise ShapeMismatch(f"row labels {labels} do not match steps (expected {list(shape.rows)})")

    filling: dict[Cell, int] = {}
    for i, bits in rows:
        cells = shape.row_cells(i)
        bits = "" if bits == "-" else bits
        if len(bits) != len(cells):
            raise ShapeMismatch(f"row {i} needs {len(cells) or '-'} bits, got {len(bits)}")
        filling.update(zip(cells, map(int, bits)))
    return shape, filling


def parse_tableau(text: str) -> PermutationTableau:
    shape, filling = parse_document(text)
    report = validate_tableau(shape, filling)
    if not report.ok:
        raise AxiomViolation(report)
    return PermutationTableau.from_filling(shape, filling)


def render_tableau(t: PermutationTableau) -> str:
    """ASCII grid: column labels west to east, then one line per row ending in ``| i``."""
    widths = {j: len(str(j)) for j in t.columns}
    lines = [" ".join(str(j) for j in reversed(t.columns))]
    for i in t.rows:
        cells = t.shape.row_cells(i)
        bits = " ".join(str(t.filling[c]).rjust(widths[c.j]) for c in cells)
        lines.append(f"{bits} | {i}" if bits else f"| {i}")
    return "\n".join(lines) + "\n"


def parse_permutation(text: str) -> Permutation:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    parts = [part.strip() for part in s.split(",")]
    if not all(re.fullmatch(r"[0-9]+", part) for part in parts):
        raise TableauSyntaxError(f"not a comma-separated list of integers: {text.strip()!r}")
    return Permutation(tuple(int(part) for part in parts))


def format_permutation(p: Permutation) -> str:
    return "(" + ",".join(map(str, p.word)) + ")"
