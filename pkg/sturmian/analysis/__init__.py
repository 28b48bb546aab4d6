"""
Analysis module for Sturmian Lines.

This package contains the engines working on words and lines:
- Exact geometry and the feasibility-polygon oracle
- The line-to-word mapping and its inverse
- Closed-form and brute-force censuses
- Return-word analysis
"""

from .geometry import LineGeometry
from .mapping import LineMapper
from .census import CensusCalculator
from .returns import ReturnAnalyzer

__all__ = [
    'LineGeometry',
    'LineMapper',
    'CensusCalculator',
    'ReturnAnalyzer',
]
