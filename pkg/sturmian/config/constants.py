"""
Constants for Sturmian Lines.
This file contains all the constants used across the package to ensure
consistency and make changing values easier.
"""
import os
import sys


def _env_int(name, default=None):
    """Read an integer environment variable, ignoring unset or malformed values."""
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        sys.stderr.write(f"Ignoring non-integer {name}={raw!r}\n")
        return default


# Exhaustive-bound guards
DEFAULT_CENSUS_LIMIT = 14         # Largest n for censuses over all Sturmian words
DEFAULT_SCAN_LIMIT = 20           # Largest n for raw scans of all 2^n binary words
BRUTE_LIMIT_OVERRIDE = _env_int("STURMIAN_BRUTE_LIMIT")
BRUTE_CENSUS_LIMIT = BRUTE_LIMIT_OVERRIDE if BRUTE_LIMIT_OVERRIDE is not None else DEFAULT_CENSUS_LIMIT
BRUTE_SCAN_LIMIT = BRUTE_LIMIT_OVERRIDE if BRUTE_LIMIT_OVERRIDE is not None else DEFAULT_SCAN_LIMIT

# Return-word analysis
HORIZON_FACTOR = 4                # Default horizon is HORIZON_FACTOR * a + |u|
MIN_HORIZON_FACTOR = 3            # Below 3a + |u| some residues lack complete return windows
APERIODIC_RATIO = 100             # prefix_len must be >= APERIODIC_RATIO * max_factor_len
MIN_OCCURRENCES_FOR_RETURNS = 3   # Factors with fewer occurrences are skipped in the Fibonacci sweep

# Extension search
EXTENSION_MAX_LENGTH = 400        # Hard stop for the full-contact extension search

# Word alphabet
LETTERS = "01"

# Rendering settings
CELL_SIZE = 40                    # Pixels per grid cell (svg and png)
RENDER_MARGIN = 20                # Pixels around the grid
POINT_RADIUS = 4                  # Radius of grid-point dots

# Colors
WHITE = (255, 255, 255)
BLACK = (0, 0, 0)
GRAY = (180, 180, 180)
RED = (200, 50, 50)
BLUE = (40, 80, 200)

SVG_GRID_COLOR = "#b4b4b4"
SVG_LINE_COLOR = "#c83232"
SVG_WORD_COLOR = "#000000"
SVG_POINT_COLOR = "#2850c8"

# ASCII rendering glyphs
ASCII_EMPTY = "."
ASCII_LINE = "*"
ASCII_WORD = "#"
ASCII_POINT = "o"
ASCII_BOTH = "@"

# Paths
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
OUTPUT_SCHEMA_PATH = os.path.join(BASE_DIR, "config", "output_schema.json")

# CLI exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Debugging control
DEBUG = 1 if _env_int("STURMIAN_DEBUG", 0) else 0


def debug_print(*args, **kwargs):
    """Print debug messages to stderr if DEBUG is enabled."""
    if DEBUG:
        kwargs.setdefault("file", sys.stderr)
        print(*args, **kwargs)


def set_debug(enabled: bool) -> None:
    """Switch debug output on or off at runtime."""
    global DEBUG
    DEBUG = 1 if enabled else 0
    const.DEBUG = DEBUG


# Create a namespace for the constants to make imports cleaner
class _Constants:
    def __init__(self):
        # Copy all module-level constants to this object
        for name, value in globals().items():
            if name.isupper() or name in ('debug_print', 'set_debug'):
                setattr(self, name, value)


# Export a single 'const' instance that can be imported elsewhere
const = _Constants()
