"""
Exception types for Sturmian Lines.
"""


class SturmianError(ValueError):
    """Base class for every precondition failure raised by the package."""


class InvalidWordError(SturmianError):
    """A word contains letters other than 0 and 1, or is empty where it must not be."""


class GridLineError(SturmianError):
    """Grid line parameters are out of range or not canonical."""


class NotSturmianError(SturmianError):
    """The word is not a finite Sturmian word."""


class NotInLineSetError(SturmianError):
    """The line has fewer than two grid points in the n x n grid."""


class OccurrenceError(SturmianError):
    """A factor does not occur often enough for the requested analysis."""


class LimitExceededError(SturmianError):
    """An exhaustive computation was requested above its configured guard."""


class ConsistencyError(RuntimeError):
    """An internal invariant broke; this indicates an implementation bug."""


class SchemaError(ConsistencyError):
    """A command output document does not match the shipped output schema."""
