"""
UI Module for Sturmian Lines.

This package contains the figure renderers.
"""

from .rendering import FigureRenderer

__all__ = ['FigureRenderer']
