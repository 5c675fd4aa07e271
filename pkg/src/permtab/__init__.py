"""Permutation tableaux and a descent-preserving bijection with permutations."""

from permtab.bijection import (
    FillCase,
    FillEvent,
    FillTrace,
    next_unfilled_cell,
    perm_to_tableau,
    tableau_to_perm,
    tableau_to_perm_traced,
)
from permtab.core import (
    BoundaryWord,
    Cell,
    Permutation,
    PermutationTableau,
    ValidityReport,
    boundary_from_descents,
    cells_of,
    make_permutation,
    tableau_length,
    validate_tableau,
)
from permtab.enumeration import (
    CountTable,
    count_table,
    enumerate_permutations,
    enumerate_tableaux,
    eulerian,
)
from permtab.statistics import (
    column_count,
    descent_set,
    restricted_zeros,
    rightmost_restricted_zeros,
    row_count,
    topmost_one,
    unrestricted_rows,
)
from permtab.textio import (
    format_permutation,
    parse_permutation,
    parse_tableau,
    render_tableau,
    serialize_tableau,
)

__version__ = "0.1.0"
