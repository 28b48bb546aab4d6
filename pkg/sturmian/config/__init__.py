"""
Config module for Sturmian Lines.

This package contains configuration settings and constants.
"""

from .constants import const, debug_print, set_debug

__all__ = ['const', 'debug_print', 'set_debug']
