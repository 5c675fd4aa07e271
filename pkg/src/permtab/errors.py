"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class TableauError(ValueError):
    """Base class for invalid user input."""


class DuplicateValue(TableauError):
    pass


class ValueOutOfRange(TableauError):
    pass


class InvalidBoundary(TableauError):
    pass


class InvalidDescentSet(TableauError):
    pass


class IncompleteFilling(TableauError):
    pass


class CellOutOfShape(TableauError):
    pass


class NoSuchColumn(TableauError):
    pass


class InvalidTableau(TableauError):
    """A filling that breaks a tableau axiom; ``report`` lists the violations."""

    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class LimitExceeded(TableauError):
    pass


class OutOfRange(TableauError):
    pass


class TableauSyntaxError(TableauError):
    pass


class ShapeMismatch(TableauError):
    pass


class AxiomViolation(InvalidTableau):
    pass


class InternalInvariantViolation(RuntimeError):
    """Raised when a bijection step finds state that a correct run never produces."""


class InsertionTargetMissing(InternalInvariantViolation):
    pass
