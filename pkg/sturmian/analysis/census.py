"""
Census module - Closed-form and brute-force counts of Sturmian words and palindromes.
"""
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from math import gcd
from typing import Iterable, List, Optional, Tuple

from sturmian.analysis.geometry import LineGeometry
from sturmian.analysis.mapping import LineMapper
from sturmian.config.constants import const, debug_print
from sturmian.models.errors import ConsistencyError, LimitExceededError, SturmianError
from sturmian.models.lines import GridLine, GridPoint
from sturmian.models.reports import BruteCensus, CensusReport, PalindromeLine
from sturmian.models.words import Word
from sturmian.utils.helpers import binary_words_with_prefix, ceil_div, modular_inverse, totient

# Prefix length used to split the 2^n scan between worker processes
_SCAN_PREFIX_LENGTH = 4


class CensusCalculator:
    """Counting formulas and their oracles."""

    @staticmethod
    def totient(k: int) -> int:
        """Euler's phi(k) for k >= 1."""
        return totient(k)

    @staticmethod
    def sturmian_count(n: int) -> int:
        """Number of Sturmian words of length n: 1 + sum_{k=1..n} (n+1-k) phi(k)."""
        if n < 0:
            raise SturmianError(f"Word length must be non-negative, got n={n}")
        return 1 + sum((n + 1 - k) * totient(k) for k in range(1, n + 1))

    @staticmethod
    def sturmian_count_double_sum(n: int) -> int:
        """The same census written as 1 + sum_{k=1..n} sum_{l=1..k} phi(l)."""
        if n < 0:
            raise SturmianError(f"Word length must be non-negative, got n={n}")
        return 1 + sum(totient(l) for k in range(1, n + 1) for l in range(1, k + 1))

    @staticmethod
    def totient_sum_identity(n: int) -> Tuple[int, int]:
        """
        Both sides of sum over L_n (slope in (0,1], intercept in [0,1)) of Z_n - 1
        = sum_{i=1..n} sum_{j=1..i} phi(j).

        Args:
            n: Grid size, at least 1

        Returns:
            (lhs, rhs) with lhs counted on the grid and rhs from totients
        """
        if n < 1:
            raise SturmianError(f"The identity is stated for n >= 1, got n={n}")
        # Geometric side: count grid points line by line
        lhs = 0
        for a in range(1, n + 1):
            for b in range(1, a + 1):
                if gcd(a, b) != 1:
                    continue
                inverse = modular_inverse(b, a)
                for c in range(a):
                    # First x with an integer point on y = (bx + c)/a
                    start = (-c * inverse) % a
                    points = 0 if start > n else (n - start) // a + 1
                    if points >= 2:
                        lhs += points - 1

        # Arithmetic side
        rhs = sum(totient(j) for i in range(1, n + 1) for j in range(1, i + 1))
        debug_print(f"Totient identity n={n}: lhs={lhs}, rhs={rhs}")
        return lhs, rhs

    @staticmethod
    def starred_lines(i: int) -> List[GridLine]:
        """
        Lines of L_i with slope in (0,1] and intercept in [0,1) through a point (i, j), j >= 1.

        Exactly one such line exists per reduced slope b/a with a <= i.
        """
        if i < 1:
            raise SturmianError(f"Column must be positive, got i={i}")
        lines = []
        for a in range(1, i + 1):
            for b in range(1, a + 1):
                if gcd(a, b) == 1:
                    # The intercept that puts an integer point over x = i
                    lines.append(GridLine(a, b, (-b * i) % a))
        return sorted(lines)

    @staticmethod
    def geometric_count(n: int) -> int:
        """Sum of |m(line)| over L_n using the closed-form image sizes."""
        if n == 0:
            return 1
        return sum(LineMapper.image_cardinality(line, n) for line in LineGeometry.enumerate_grid_lines(n))

    @staticmethod
    def palindrome_count(n: int) -> int:
        """Number of Sturmian palindromes of length n: 1 + sum_{k=0..ceil(n/2)-1} phi(n-2k)."""
        if n < 0:
            raise SturmianError(f"Word length must be non-negative, got n={n}")
        return 1 + sum(totient(n - 2 * k) for k in range(ceil_div(n, 2)))

    @staticmethod
    def palindrome_lines(n: int) -> List[PalindromeLine]:
        """
        Lines whose through-all-points word is a palindrome other than 1^n.

        For each leftmost column i and each a with gcd(a, n - 2i) = 1, the slope
        numerator b solves b(n - 2i) = -1 (mod a) and the intercept is fixed by
        0 <= a*j - b*i < a.
        """
        if n < 1:
            raise SturmianError(f"Word length must be positive, got n={n}")
        lines = []
        # Leftmost grid point in column i, rightmost in column n - i
        for i in range(ceil_div(n, 2)):
            for a in range(i + 1, n - i + 1):
                # Symmetry about x = n/2 needs gcd(a, n - 2i) = 1
                if gcd(a, n - 2 * i) != 1:
                    continue
                b = (-modular_inverse(n - 2 * i, a)) % a
                # Lowest height keeping the intercept in [0, 1)
                j = ceil_div(b * i, a)
                line = GridLine(a, b, a * j - b * i)
                lines.append(PalindromeLine(line, GridPoint(i, j), i, a, b))
        return lines

    @staticmethod
    def palindrome_words(n: int) -> List[Word]:
        """Every Sturmian palindrome of length n, built from palindrome_lines plus 1^n."""
        words = []
        for entry in CensusCalculator.palindrome_lines(n):
            word = LineMapper.through_all_word(entry.line, n)
            if not word.is_palindrome():
                raise ConsistencyError(f"Line {entry.line} with params {entry.params} produced non-palindrome {word}")
            words.append(word)
        # 1^n sits on y = x + 1, which has no through-all word
        words.append(Word.constant(1, n))
        return words

    @staticmethod
    def brute_force_census(n: int, workers: Optional[int] = None) -> BruteCensus:
        """
        Scan all 2^n binary words with the balance oracle.

        With workers > 1 the words are split by their first letters between
        processes; the chunks are merged back in lexicographic order.
        """
        if n < 1:
            raise SturmianError(f"Word length must be positive, got n={n}")
        if n > const.BRUTE_SCAN_LIMIT:
            raise LimitExceededError(
                f"n={n} exceeds the scan bound {const.BRUTE_SCAN_LIMIT} (set STURMIAN_BRUTE_LIMIT to raise it)"
            )
        # One chunk per prefix, in lexicographic order
        prefix_length = min(n, _SCAN_PREFIX_LENGTH)
        prefixes = ["".join(letters) for letters in product("01", repeat=prefix_length)]
        if workers and workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                chunks = list(pool.map(_balanced_with_prefix, prefixes, [n] * len(prefixes)))
        else:
            chunks = [_balanced_with_prefix(prefix, n) for prefix in prefixes]
        # Merge chunks back in prefix order
        words = tuple(word for chunk in chunks for word in chunk)
        palindromic = sum(1 for word in words if word.is_palindrome())
        debug_print(f"Brute census n={n}: {len(words)} Sturmian, {palindromic} palindromic")
        return BruteCensus(n, len(words), palindromic, words)

    @staticmethod
    def census_report(n: int, methods: Iterable[str] = ("formula", "brute", "geometric"),
                      workers: Optional[int] = None) -> CensusReport:
        """Run the requested counting methods for one length."""
        methods = set(methods)
        unknown = methods - {"formula", "brute", "geometric"}
        if unknown:
            raise SturmianError(f"Unknown census method(s): {', '.join(sorted(unknown))}")
        report = {"n": n}
        if "formula" in methods:
            report["formula_count"] = CensusCalculator.sturmian_count(n)
            report["palindrome_formula"] = CensusCalculator.palindrome_count(n)
        if "brute" in methods:
            brute = CensusCalculator.brute_force_census(n, workers)
            report["brute_count"] = brute.sturmian
            report["palindrome_brute"] = brute.palindromic
        if "geometric" in methods:
            report["geometric_count"] = CensusCalculator.geometric_count(n)
        return CensusReport(**report)


def _balanced_with_prefix(prefix: str, n: int) -> List[Word]:
    """Balanced words of length n starting with prefix (process-pool task)."""
    return [word for word in binary_words_with_prefix(prefix, n) if word.is_balanced()]
