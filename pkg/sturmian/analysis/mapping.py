"""
Mapping module - The map from grid lines to sets of finite Sturmian words.

Every Sturmian word of length n is hugged by exactly one grid line of L_n.
LineMapper builds the image set of a line from the ways its grid points can
be split between "passed just below" and "passed just above", finds the
line of a given word, and checks that the image sets partition the words.
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import repeat
from typing import List, Optional, Tuple

from sturmian.analysis.geometry import LineGeometry
from sturmian.config.constants import const, debug_print
from sturmian.models.errors import (
    ConsistencyError, InvalidWordError, LimitExceededError, NotInLineSetError,
    NotSturmianError, SturmianError,
)
from sturmian.models.lines import GridLine
from sturmian.models.reports import ImageSet, PartitionReport, SplitMode, SplitSpec
from sturmian.models.words import Word
from sturmian.utils.helpers import all_binary_words


class LineMapper:
    """Image sets m(line), their sizes and the inverse search."""

    @staticmethod
    def valid_splits(line: GridLine, n: int) -> List[SplitSpec]:
        """
        Splits whose "above" set straddles n/2, honouring the x = 0 boundary.

        Order: through-all-points first, then below-first by ascending count,
        then the remaining above-first splits by descending count.
        """
        # Degenerate boundary lines
        if (line.a, line.b, line.c) == (1, 1, 1):
            return []
        if (line.a, line.b, line.c) == (1, 0, 0):
            return [SplitSpec(SplitMode.ABOVE_FIRST, n + 1)]
        total = LineGeometry.z_count(line, n)
        half = LineGeometry.z_half(line, n)
        splits = []
        # Through all points, impossible when the line starts at height 1
        if line.c != line.a:
            splits.append(SplitSpec(SplitMode.ABOVE_FIRST, total))
        if line.c != 0:
            # A point at height 1 over x = 0 must be passed below
            splits.extend(SplitSpec(SplitMode.BELOW_FIRST, k) for k in range(1, half))
        # Above-first splits that still reach past n/2
        if line.c != line.a:
            splits.extend(SplitSpec(SplitMode.ABOVE_FIRST, k) for k in range(total - 1, half, -1))
        return splits

    @staticmethod
    def word_from_split(line: GridLine, n: int, split: SplitSpec) -> Word:
        """Word whose broken line sits on the line except at grid points passed below."""
        points = LineGeometry.grid_points(line, n)
        above = split.above_mask(len(points))
        # Start on the line, then drop below every point passed from underneath
        heights = [line.numerator_at(x) // line.a for x in range(n + 1)]
        for point, is_above in zip(points, above):
            if not is_above:
                heights[point.x] -= 1
        return Word.from_letters(heights[k + 1] - heights[k] for k in range(n))

    @staticmethod
    def _check_in_line_set(line: GridLine, n: int):
        if n < 1:
            raise SturmianError(f"Word length must be positive, got n={n}")
        if not LineGeometry.is_boundary_line(line) and LineGeometry.z_count(line, n) < 2:
            raise NotInLineSetError(f"Line {line} has fewer than two grid points with 0 <= x <= {n}")

    @staticmethod
    def image_words(line: GridLine, n: int) -> ImageSet:
        """
        The image set m(line) of length-n words.

        Args:
            line: A line of L_n or one of y = 0, y = 1, y = x, y = x + 1
            n: Word length

        Returns:
            ImageSet listing each word with the split that realizes it
        """
        LineMapper._check_in_line_set(line, n)
        entries = tuple(
            (LineMapper.word_from_split(line, n, split), split)
            for split in LineMapper.valid_splits(line, n)
        )
        return ImageSet(line, n, entries)

    @staticmethod
    def image_cardinality(line: GridLine, n: int) -> int:
        """Closed-form size of m(line)."""
        LineMapper._check_in_line_set(line, n)
        if (line.a, line.b, line.c) == (1, 1, 1):
            return 0
        if (line.a, line.b, line.c) == (1, 0, 0):
            return 1
        total = LineGeometry.z_count(line, n)
        half = LineGeometry.z_half(line, n)
        # Intercept 0 loses the below-first splits, intercept 1 loses the above-first ones
        if line.c == 0:
            return total - half
        if line.c == line.a:
            return half - 1
        return total - 1

    @staticmethod
    def through_all_word(line: GridLine, n: int) -> Word:
        """The member of m(line) whose broken line passes through every grid point."""
        LineMapper._check_in_line_set(line, n)
        if line.c == line.a:
            raise SturmianError(f"Line {line} has intercept 1: no word passes through all its grid points")
        return LineGeometry.mechanical_word(line, n)

    @staticmethod
    def locate_line(word: Word) -> GridLine:
        """
        The grid line whose image set contains the word.

        Lower a defining line until it touches the broken line's points, then
        rotate it around the leftmost touched point (i, j) until it meets a
        second one: clockwise when 2i <= n, anticlockwise otherwise.
        """
        n = len(word)
        if n < 1:
            raise InvalidWordError("Cannot locate the line of the empty word")
        if not LineGeometry.is_finite_sturmian(word):
            raise NotSturmianError(f"Word {word} is not finite Sturmian")
        # Lower the defining line onto the broken line
        defining = LineGeometry.sample_defining_line(word)
        heights = word.heights()
        drops = [Fraction(heights[k]) - k * defining.alpha for k in range(n + 1)]
        touch = max(drops)
        i = drops.index(touch)
        j = heights[i]

        # Rotate around (i, j) towards the longer side until a second point is hit
        if 2 * i <= n:
            slope = max(Fraction(heights[k] - j, k - i) for k in range(i + 1, n + 1))
        else:
            slope = min(Fraction(j - heights[k], i - k) for k in range(i))
        a, b = slope.denominator, slope.numerator
        line = LineGeometry.make_grid_line(a, b, a * j - b * i)
        debug_print(f"Word {word} touches ({i}, {j}); pivoted to {line}")
        return line

    @staticmethod
    def locate_split(word: Word) -> Tuple[GridLine, SplitSpec]:
        """The line of the word together with the split that realizes it."""
        line = LineMapper.locate_line(word)
        split = LineMapper.image_words(line, len(word)).split_of(word)
        if split is None:
            raise ConsistencyError(f"Word {word} is missing from the image set of its line {line}")
        return line, split

    @staticmethod
    def image_sets(n: int, workers: Optional[int] = None) -> List[ImageSet]:
        """Image sets of every line of L_n in canonical line order."""
        lines = LineGeometry.enumerate_grid_lines(n)
        if workers and workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                return list(pool.map(_image_set_task, zip(lines, repeat(n)), chunksize=64))
        return [LineMapper.image_words(line, n) for line in lines]

    @staticmethod
    def verify_partition(n: int, workers: Optional[int] = None) -> PartitionReport:
        """Check that the image sets over L_n partition the Sturmian words of length n."""
        if n < 1:
            raise SturmianError(f"Partition check needs n >= 1, got n={n}")
        if n > const.BRUTE_CENSUS_LIMIT:
            raise LimitExceededError(
                f"n={n} exceeds the exhaustive bound {const.BRUTE_CENSUS_LIMIT} (set STURMIAN_BRUTE_LIMIT to raise it)"
            )
        # Brute-force side: every balanced word of length n
        sturmian = [word for word in all_binary_words(n) if word.is_balanced()]

        # Geometric side: how often each word is produced over L_n
        hits = Counter()
        for image in LineMapper.image_sets(n, workers):
            hits.update(image.words)
        geometric_sum = sum(hits.values())
        duplicates = tuple(sorted(word for word, count in hits.items() if count > 1))
        missing = tuple(word for word in sturmian if hits[word] == 0)
        debug_print(f"Partition n={n}: brute {len(sturmian)}, geometric {geometric_sum}")
        return PartitionReport(n, len(sturmian), geometric_sum, duplicates, missing)

    @staticmethod
    def extend_to_full_contact(word: Word) -> Tuple[Word, GridLine]:
        """
        Extend the word to one that passes through all grid points of its line.

        Searches n0 = |w|, |w| + 1, ... and the lines of L_n0 in canonical
        order for the first through-all-points word having w as a prefix.
        """
        if len(word) < 1:
            raise InvalidWordError("Cannot extend the empty word")
        if not LineGeometry.is_finite_sturmian(word):
            raise NotSturmianError(f"Word {word} is not finite Sturmian")
        for length in range(len(word), const.EXTENSION_MAX_LENGTH + 1):
            for line in LineGeometry.enumerate_grid_lines(length):
                if line.c == line.a:  # No through-all word
                    continue
                if LineGeometry.mechanical_word(line, len(word)) != word:
                    continue
                extended = LineGeometry.mechanical_word(line, length)
                debug_print(f"Extended {word} to {extended} on {line}")
                return extended, line
        raise LimitExceededError(
            f"No full-contact extension of {word} up to length {const.EXTENSION_MAX_LENGTH}"
        )


def _image_set_task(args: Tuple[GridLine, int]) -> ImageSet:
    """Picklable worker entry for the process pool."""
    line, n = args
    return LineMapper.image_words(line, n)
