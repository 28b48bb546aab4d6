"""
Result models for Sturmian Lines.

These are the values handed between the analysis engines and the command
line: image sets, partition and census reports, palindrome lines, residue
intervals, return reports and render requests. Every report knows how to turn
itself into the JSON document the CLI prints; counts that can outgrow a
machine word are written as decimal strings.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple, Union

from sturmian.config.constants import const
from sturmian.models.errors import SturmianError
from sturmian.models.lines import DefiningLine, GridLine, GridPoint
from sturmian.models.words import Word


def _count(value: Optional[int]) -> Optional[str]:
    return None if value is None else str(value)


class SplitMode(Enum):
    """Which side of the line the defining line hugs first."""

    BELOW_FIRST = "below-first"
    ABOVE_FIRST = "above-first"


@dataclass(frozen=True)
class SplitSpec:
    """
    Split of a line's grid points between "just below" and "just above".

    below-first: the first `count` grid points are passed below, the rest above.
    above-first: the first `count` grid points are passed above, the rest below.
    """

    mode: SplitMode
    count: int

    def above_mask(self, total: int) -> List[bool]:
        """For each of `total` grid points, True when the defining line passes above it."""
        if self.mode is SplitMode.BELOW_FIRST:
            return [index >= self.count for index in range(total)]
        return [index < self.count for index in range(total)]

    def is_through_all(self, total: int) -> bool:
        return self.mode is SplitMode.ABOVE_FIRST and self.count == total

    def to_dict(self) -> Dict[str, Any]:
        return {"mode": self.mode.value, "count": self.count}


@dataclass(frozen=True)
class ImageSet:
    """The set m(line) of length-n words together with the split realizing each."""

    line: GridLine
    n: int
    entries: Tuple[Tuple[Word, SplitSpec], ...]

    @property
    def words(self) -> List[Word]:
        return [word for word, _ in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: Word) -> bool:
        return any(entry == word for entry, _ in self.entries)

    def split_of(self, word: Word) -> Optional[SplitSpec]:
        for entry, split in self.entries:
            if entry == word:
                return split
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "line": str(self.line),
            "n": self.n,
            "cardinality": _count(len(self.entries)),
            "words": [str(word) for word in self.words],
            "splits": [dict(split.to_dict(), word=str(word)) for word, split in self.entries],
        }


@dataclass(frozen=True)
class PartitionReport:
    """Outcome of checking that the image sets partition the Sturmian words of length n."""

    n: int
    brute_count: int
    geometric_sum: int
    duplicates: Tuple[Word, ...] = ()
    missing: Tuple[Word, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.duplicates and not self.missing and self.brute_count == self.geometric_sum

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "brute_count": _count(self.brute_count),
            "geometric_sum": _count(self.geometric_sum),
            "duplicates": [str(word) for word in self.duplicates],
            "missing": [str(word) for word in self.missing],
            "pass": self.passed,
        }


@dataclass(frozen=True)
class CensusReport:
    """Sturmian and palindrome counts of one length, by whichever methods were run."""

    n: int
    formula_count: Optional[int] = None
    brute_count: Optional[int] = None
    geometric_count: Optional[int] = None
    palindrome_formula: Optional[int] = None
    palindrome_brute: Optional[int] = None

    @property
    def consistent(self) -> bool:
        """True when every pair of computed counts agrees."""
        counts = {c for c in (self.formula_count, self.brute_count, self.geometric_count) if c is not None}
        palindromes = {c for c in (self.palindrome_formula, self.palindrome_brute) if c is not None}
        return len(counts) <= 1 and len(palindromes) <= 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "formula_count": _count(self.formula_count),
            "brute_count": _count(self.brute_count),
            "geometric_count": _count(self.geometric_count),
            "palindrome_formula": _count(self.palindrome_formula),
            "palindrome_brute": _count(self.palindrome_brute),
        }


@dataclass(frozen=True)
class BruteCensus:
    """Result of scanning all 2^n binary words."""

    n: int
    sturmian: int
    palindromic: int
    words: Tuple[Word, ...]

    @property
    def palindromes(self) -> List[Word]:
        return [word for word in self.words if word.is_palindrome()]


@dataclass(frozen=True)
class PalindromeLine:
    """A line of P_n together with the construction parameters (i, a, b) that produced it."""

    line: GridLine
    leftmost: GridPoint
    i: int
    a: int
    b: int

    @property
    def params(self) -> Tuple[int, int, int]:
        return (self.i, self.a, self.b)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "line": str(self.line),
            "leftmost": [self.leftmost.x, self.leftmost.y],
            "params": list(self.params),
        }


@dataclass(frozen=True)
class ResidueInterval:
    """
    Cyclic interval [c1, c2] of residues modulo a.

    When `wraps` is set the interval runs c1, c1+1, ..., a-1, 0, ..., c2. An
    empty interval has c1 = c2 = None. `contact_residues` lists the residues of
    the interval whose line has a point at height (a-1)/a (mod 1).
    """

    a: int
    c1: Optional[int]
    c2: Optional[int]
    wraps: bool = False
    contact_residues: Tuple[int, ...] = ()

    @classmethod
    def empty(cls, a: int) -> "ResidueInterval":
        return cls(a, None, None, False, ())

    @property
    def is_empty(self) -> bool:
        return self.c1 is None

    @property
    def residues(self) -> List[int]:
        if self.is_empty:
            return []
        size = (self.c2 - self.c1) % self.a + 1
        return [(self.c1 + step) % self.a for step in range(size)]

    def __contains__(self, residue: int) -> bool:
        if self.is_empty:
            return False
        return (residue - self.c1) % self.a <= (self.c2 - self.c1) % self.a

    def to_dict(self) -> Dict[str, Any]:
        return {"c1": self.c1, "c2": self.c2, "wraps": self.wraps}


@dataclass(frozen=True)
class ReturnReport:
    """Occurrences and return words of a factor in the word of a grid line."""

    factor: Word
    line: GridLine
    horizon: int
    occurrence_positions: Tuple[int, ...]
    start_residues: Tuple[int, ...]
    interval: ResidueInterval
    return_words: Tuple[Word, ...]
    returns_by_residue: Dict[int, Word] = field(default_factory=dict)
    complete: bool = True

    @property
    def distinct_returns(self) -> FrozenSet[Word]:
        return frozenset(self.return_words)

    @property
    def passed(self) -> bool:
        return len(self.distinct_returns) <= 2

    def to_dict(self) -> Dict[str, Any]:
        return {
            "factor": str(self.factor),
            "line": str(self.line),
            "horizon": self.horizon,
            "interval": self.interval.to_dict(),
            "occurrences": list(self.occurrence_positions),
            "residues": list(self.start_residues),
            "returns": sorted(str(word) for word in self.distinct_returns),
            "return_sequence": [str(word) for word in self.return_words],
            "complete": self.complete,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class RenderSpec:
    """What to draw: a line, a grid size, an optional word and the output format."""

    line: Union[GridLine, DefiningLine]
    n: int
    word: Optional[Word] = None
    format: str = "svg"
    cell_size: int = const.CELL_SIZE

    def __post_init__(self):
        if self.n < 1:
            raise SturmianError(f"Grid size must be positive, got n={self.n}")
        if self.word is not None and len(self.word) != self.n:
            raise SturmianError(f"Word {self.word} has length {len(self.word)}, expected n={self.n}")
        if self.format not in ("svg", "ascii", "png"):
            raise SturmianError(f"Unknown render format {self.format!r}")
        if self.cell_size < 1:
            raise SturmianError(f"Cell size must be positive, got {self.cell_size}")
