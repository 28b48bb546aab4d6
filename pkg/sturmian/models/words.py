"""
Word model for Sturmian Lines.

A word is a finite sequence over {0, 1}. It is stored as a plain 0/1 string,
which is also its text form, so goldens and JSON output stay diff-friendly.
"""
from dataclasses import dataclass
from typing import Iterator, List, Set, Tuple

from sturmian.config.constants import const
from sturmian.models.errors import InvalidWordError, OccurrenceError

# Substitution 0 -> 01, 1 -> 0 whose fixed point is the Fibonacci word
_FIBONACCI_MORPHISM = str.maketrans({"0": "01", "1": "0"})


@dataclass(frozen=True, order=True)
class Word:
    """Immutable binary word."""

    text: str = ""

    def __post_init__(self):
        if not isinstance(self.text, str):
            raise InvalidWordError(f"Word text must be a string, got {type(self.text).__name__}")
        if self.text.strip(const.LETTERS):
            raise InvalidWordError(f"Word {self.text!r} contains letters outside {{0, 1}}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse the text form of a word (surrounding whitespace is ignored)."""
        return cls(text.strip())

    @classmethod
    def from_letters(cls, letters) -> "Word":
        """Build a word from a sequence of 0/1 integers."""
        letters = list(letters)
        if any(letter not in (0, 1) for letter in letters):
            raise InvalidWordError(f"Letters must be 0 or 1, got {letters}")
        return cls("".join(str(letter) for letter in letters))

    @classmethod
    def constant(cls, letter: int, n: int) -> "Word":
        """The word letter^n."""
        return cls.from_letters([letter] * n)

    @classmethod
    def fibonacci_prefix(cls, n: int) -> "Word":
        """
        First n letters of the fixed point of 0 -> 01, 1 -> 0.

        Args:
            n: Prefix length, at least 1

        Returns:
            The Fibonacci word prefix of length n
        """
        if n < 1:
            raise InvalidWordError(f"Fibonacci prefix length must be positive, got {n}")
        text = "0"
        while len(text) < n:
            text = text.translate(_FIBONACCI_MORPHISM)
        return cls(text[:n])

    def __len__(self) -> int:
        return len(self.text)

    def __str__(self) -> str:
        return self.text

    def __iter__(self) -> Iterator[int]:
        return (int(ch) for ch in self.text)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.text[index])
        return int(self.text[index])

    def __add__(self, other: "Word") -> "Word":
        return Word(self.text + other.text)

    @property
    def letters(self) -> Tuple[int, ...]:
        """Letters as a tuple of integers."""
        return tuple(self)

    def heights(self) -> List[int]:
        """Heights of the broken line: entry k is the number of 1s among the first k letters."""
        heights = [0]
        for letter in self:
            heights.append(heights[-1] + letter)
        return heights

    def goes_through(self, i: int, j: int) -> bool:
        """True if the broken line of the word passes through the point (i, j)."""
        if not 0 <= i <= len(self):
            return False
        return self.text[:i].count("1") == j

    def reverse(self) -> "Word":
        """Letters in reverse order."""
        return Word(self.text[::-1])

    def is_palindrome(self) -> bool:
        return self.text == self.text[::-1]

    def occurrences(self, u: "Word") -> List[int]:
        """
        Start positions of every (possibly overlapping) occurrence of u.

        Args:
            u: Non-empty factor to look for

        Returns:
            Sorted list of positions i with self[i:i+|u|] == u
        """
        if len(u) == 0:
            raise InvalidWordError("Cannot look for occurrences of the empty word")
        positions = []
        start = self.text.find(u.text)
        while start != -1:
            positions.append(start)
            start = self.text.find(u.text, start + 1)
        return positions

    def return_words_in(self, u: "Word") -> List["Word"]:
        """
        Return words of u in this word, one per pair of consecutive occurrences.

        Only complete pairs are used; the tail after the last occurrence is ignored.
        """
        positions = self.occurrences(u)
        if len(positions) < 2:
            raise OccurrenceError(
                f"Factor {u} occurs {len(positions)} time(s) in a word of length {len(self)}; need at least 2"
            )
        return [Word(self.text[p:q]) for p, q in zip(positions, positions[1:])]

    def distinct_return_words(self, u: "Word") -> Set["Word"]:
        return set(self.return_words_in(u))

    def is_balanced(self) -> bool:
        """
        Balance oracle: equal-length factors differ by at most one in their number of 1s.

        Sliding-window counts per length via prefix sums.
        """
        heights = self.heights()
        n = len(self)
        for length in range(1, n):
            counts = [heights[i + length] - heights[i] for i in range(n - length + 1)]
            if max(counts) - min(counts) > 1:
                return False
        return True

    def factors(self, length: int) -> Set["Word"]:
        """Distinct factors of the given length."""
        if length < 0:
            raise InvalidWordError(f"Factor length must be non-negative, got {length}")
        return {Word(self.text[i:i + length]) for i in range(len(self) - length + 1)}

    def factor_complexity(self, length: int) -> int:
        """Number of distinct factors of the given length."""
        return len(self.factors(length))
