"""
Models module for Sturmian Lines.

This package contains the value types:
- Words over {0, 1}
- Grid lines, grid points, defining lines and feasibility polygons
- Reports produced by the analysis engines
- Exceptions
"""

from .errors import (
    SturmianError, InvalidWordError, GridLineError, NotSturmianError,
    NotInLineSetError, OccurrenceError, LimitExceededError, ConsistencyError, SchemaError,
)
from .words import Word
from .lines import GridPoint, GridLine, DefiningLine, LinearConstraint, FeasibilityPolygon
from .reports import (
    SplitMode, SplitSpec, ImageSet, PartitionReport, CensusReport, BruteCensus,
    PalindromeLine, ResidueInterval, ReturnReport, RenderSpec,
)

__all__ = [
    'SturmianError', 'InvalidWordError', 'GridLineError', 'NotSturmianError',
    'NotInLineSetError', 'OccurrenceError', 'LimitExceededError', 'ConsistencyError', 'SchemaError',
    'Word',
    'GridPoint', 'GridLine', 'DefiningLine', 'LinearConstraint', 'FeasibilityPolygon',
    'SplitMode', 'SplitSpec', 'ImageSet', 'PartitionReport', 'CensusReport', 'BruteCensus',
    'PalindromeLine', 'ResidueInterval', 'ReturnReport', 'RenderSpec',
]
