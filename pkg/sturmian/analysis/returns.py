"""
Returns module - Start residues, occurrence intervals and return words.

A factor u begins at position i of the word of y = (bx + c)/a exactly when
the start residue (b*i + c) mod a falls in a cyclic interval [c1, c2] that
depends only on (a, b, u). Everything here is checked against a direct scan
of the word rather than trusted.
"""
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from math import gcd
from typing import Dict, List, Optional, Sequence

from sturmian.analysis.geometry import LineGeometry
from sturmian.config.constants import const, debug_print
from sturmian.models.errors import (
    ConsistencyError, GridLineError, InvalidWordError, LimitExceededError, OccurrenceError, SturmianError,
)
from sturmian.models.lines import GridLine
from sturmian.models.reports import ResidueInterval, ReturnReport
from sturmian.models.words import Word
from sturmian.utils.helpers import modular_inverse


class ReturnAnalyzer:
    """Residue bookkeeping and return-word checks for mechanical words."""

    @staticmethod
    def start_residue(line: GridLine, i: int) -> int:
        """Numerator (b*i + c) mod a of the point where the factor at position i starts; 0 when a = 1."""
        if i < 0:
            raise SturmianError(f"Position must be non-negative, got i={i}")
        return (line.b * i + line.c) % line.a

    @staticmethod
    def _check_slope(a: int, b: int):
        if a < 1 or not 0 <= b <= a or gcd(a, b) != 1:
            raise GridLineError(f"Slope {b}/{a} is not a reduced fraction in [0, 1]")

    @staticmethod
    def factor_from_residue(a: int, b: int, cprime: int, length: int) -> Word:
        """
        Word of length `length` read off y = (b*x + cprime)/a from x = 0.

        Args:
            a: Slope denominator
            b: Slope numerator, coprime to a
            cprime: Start residue in [0, a)
            length: Factor length, at least 1

        Returns:
            Word with letters floor((b(k+1)+cprime)/a) - floor((bk+cprime)/a)
        """
        ReturnAnalyzer._check_slope(a, b)
        if not 0 <= cprime < a:
            raise SturmianError(f"Residue {cprime} outside [0, {a})")
        if length < 1:
            raise InvalidWordError(f"Factor length must be positive, got {length}")
        return Word.from_letters((b * (k + 1) + cprime) // a - (b * k + cprime) // a for k in range(length))

    @staticmethod
    def residue_classes(a: int, b: int, length: int, rows: Optional[Sequence[str]] = None) -> Dict[Word, List[int]]:
        """
        For every factor of the given length, the ascending residues that start it.

        `rows` may hold, per residue, a longer factor read off the same slope;
        its prefixes are used instead of recomputing each factor.
        """
        if rows is None:
            rows = [ReturnAnalyzer.factor_from_residue(a, b, cprime, length).text for cprime in range(a)]
        elif len(rows) != a or any(len(row) < length for row in rows):
            raise SturmianError(f"Need {a} precomputed rows of length >= {length}")
        classes = defaultdict(list)
        for cprime, row in enumerate(rows):
            classes[Word(row[:length])].append(cprime)
        return dict(classes)

    @staticmethod
    def contact_residues(a: int, b: int, residues: Sequence[int], length: int) -> List[int]:
        """Residues whose line reaches height (a-1)/a (mod 1) somewhere on 0 <= x <= length."""
        inverse = modular_inverse(b, a)
        # First x >= 0 with b*x + c' = a - 1 (mod a)
        return [cprime for cprime in residues if ((a - 1 - cprime) * inverse) % a <= length]

    @staticmethod
    def interval_from_residues(a: int, b: int, residues: Sequence[int], length: int) -> ResidueInterval:
        """
        Fold a residue set into a cyclic interval and check its (a-1)/a contact.

        Raises:
            ConsistencyError: if the set is not one cyclic interval or the contact is not at its upper end
        """
        if not residues:
            return ResidueInterval.empty(a)
        members = set(residues)
        if len(members) == a:
            c1, c2 = 0, a - 1
        else:
            # A cyclic interval has exactly one member without a predecessor
            starts = [c for c in sorted(members) if (c - 1) % a not in members]
            if len(starts) != 1:
                raise ConsistencyError(f"Residues {sorted(members)} modulo {a} are not one cyclic interval")
            c1 = starts[0]
            c2 = (c1 + len(members) - 1) % a
        interval = ResidueInterval(a, c1, c2, c1 + len(members) - 1 >= a)
        # Only the upper end may touch height (a-1)/a
        contacts = ReturnAnalyzer.contact_residues(a, b, interval.residues, length)
        if len(members) < a and contacts != [c2]:
            raise ConsistencyError(f"Interval [{c1}, {c2}] mod {a} has (a-1)/a contacts at {contacts}, expected [{c2}]")
        return ResidueInterval(a, c1, c2, interval.wraps, tuple(contacts))

    @staticmethod
    def residue_interval(a: int, b: int, u: Word) -> ResidueInterval:
        """
        Cyclic interval of residues c' for which y = (b*x + c')/a starts with u.

        Returns the empty interval when no residue represents u.
        """
        ReturnAnalyzer._check_slope(a, b)
        if len(u) < 1:
            raise InvalidWordError("Residue interval of the empty word is undefined")
        residues = [c for c in range(a) if ReturnAnalyzer.factor_from_residue(a, b, c, len(u)) == u]
        return ReturnAnalyzer.interval_from_residues(a, b, residues, len(u))

    @staticmethod
    def shift_up(line: GridLine) -> GridLine:
        """The line moved up by 1/a."""
        if line.c >= line.a:
            raise GridLineError(f"Line {line} has intercept 1 and cannot move up inside [0, 1]")
        return GridLine(line.a, line.b, line.c + 1)

    @staticmethod
    def shifted_word_delta(line: GridLine, n: int) -> List[int]:
        """
        Positions where the length-n words of the line and of shift_up(line) differ.

        Each grid point x of the shifted line turns letters (x-1, x) from 01 to
        10; at x = 0 only letter 0 drops and at x = n only letter n-1 rises.
        """
        if n < 1:
            raise SturmianError(f"Word length must be positive, got n={n}")
        shifted = ReturnAnalyzer.shift_up(line)
        before = LineGeometry.mechanical_word(line, n)
        after = LineGeometry.mechanical_word(shifted, n)
        # Predicted letter changes, one pair per grid point of the shifted line
        expected = defaultdict(int)
        for point in LineGeometry.grid_points(shifted, n):
            if point.x >= 1:
                expected[point.x - 1] += 1
            if point.x <= n - 1:
                expected[point.x] -= 1
        expected = {k: delta for k, delta in expected.items() if delta}
        actual = {k: after[k] - before[k] for k in range(n) if after[k] != before[k]}
        if actual != expected:
            raise ConsistencyError(
                f"Shifting {line} to {shifted} changed letters {actual}, expected {expected}"
            )
        debug_print(f"Shift {line} -> {shifted}: {before} -> {after}")
        return sorted(actual)

    @staticmethod
    def returns_of_factor(line: GridLine, u: Word, horizon: Optional[int] = None) -> ReturnReport:
        """
        Occurrences and return words of u in the length-horizon word of the line.

        Args:
            line: Grid line
            u: Non-empty factor
            horizon: Word length to scan; defaults to 4a + |u|

        Returns:
            ReturnReport; `complete` is False when the horizon is below 3a + |u|
        """
        if len(u) < 1:
            raise InvalidWordError("Return words of the empty word are undefined")
        if horizon is None:
            horizon = const.HORIZON_FACTOR * line.a + len(u)
        if horizon < 1:
            raise SturmianError(f"Horizon must be positive, got {horizon}")
        complete = horizon >= const.MIN_HORIZON_FACTOR * line.a + len(u)
        if not complete:
            debug_print(f"Horizon {horizon} < {const.MIN_HORIZON_FACTOR}a + |u|: some residues may lack returns")

        # Scan the word directly
        word = LineGeometry.mechanical_word(line, horizon)
        positions = word.occurrences(u)
        if len(positions) < 2:
            raise OccurrenceError(f"Factor {u} occurs {len(positions)} time(s) within horizon {horizon} of {line}")

        # Cross-check: occurrences are exactly the positions whose residue lies in the interval
        interval = ReturnAnalyzer.residue_interval(line.a, line.b, u)
        predicted = [
            i for i in range(horizon - len(u) + 1)
            if ReturnAnalyzer.start_residue(line, i) in interval
        ]
        if predicted != positions:
            raise ConsistencyError(f"Occurrences {positions} of {u} disagree with residue interval prediction {predicted}")

        # Cross-check: each start residue determines its return word
        residues = [ReturnAnalyzer.start_residue(line, p) for p in positions]
        return_words = word.return_words_in(u)
        by_residue: Dict[int, Word] = {}
        for residue, return_word in zip(residues, return_words):
            if by_residue.setdefault(residue, return_word) != return_word:
                raise ConsistencyError(f"Residue {residue} starts two different returns of {u}")

        # v_c1, ..., v_c2 may change value only once
        ordered = [by_residue[c] for c in interval.residues if c in by_residue]
        changes = sum(1 for left, right in zip(ordered, ordered[1:]) if left != right)
        if changes > 1:
            raise ConsistencyError(f"Returns of {u} along [{interval.c1}, {interval.c2}] change {changes} times")

        report = ReturnReport(
            factor=u,
            line=line,
            horizon=horizon,
            occurrence_positions=tuple(positions),
            start_residues=tuple(residues),
            interval=interval,
            return_words=tuple(return_words),
            returns_by_residue=by_residue,
            complete=complete,
        )
        debug_print(f"Returns of {u} on {line}: {sorted(str(w) for w in report.distinct_returns)}")
        return report

    @staticmethod
    def verify_two_returns_aperiodic(max_factor_len: int, prefix_len: int,
                                     workers: Optional[int] = None) -> bool:
        """
        Every factor of a Fibonacci prefix with enough occurrences has exactly two returns.

        Raises:
            LimitExceededError: if prefix_len < 100 * max_factor_len
        """
        if max_factor_len < 1:
            raise SturmianError(f"Factor length must be positive, got {max_factor_len}")
        if prefix_len < const.APERIODIC_RATIO * max_factor_len:
            raise LimitExceededError(
                f"Prefix length {prefix_len} is below {const.APERIODIC_RATIO} x max factor length {max_factor_len}"
            )
        # One independent task per factor length
        text = Word.fibonacci_prefix(prefix_len).text
        lengths = list(range(1, max_factor_len + 1))
        if workers and workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_two_returns_at_length, [text] * len(lengths), lengths))
        else:
            results = [_two_returns_at_length(text, length) for length in lengths]
        return all(results)

    @staticmethod
    def verify_residue_correspondence(max_a: int) -> bool:
        """
        Occurrence/residue correspondence for every slope b/a with 2 <= a <= max_a.

        Every position of the c = 0 word over 5a letters must start the
        length-a factor its residue predicts, which fixes the occurrences of
        all shorter factors too. Words with c != 0 are shifts of that word by
        t with b*t = c (mod a), so their 4a-letter horizons are covered. For
        each length up to a the residue classes must then be cyclic intervals
        with the (a-1)/a contact at c2.
        """
        for a in range(2, max_a + 1):
            for b in range(1, a):
                if gcd(a, b) != 1:
                    continue
                line = GridLine(a, b, 0)
                rows = [ReturnAnalyzer.factor_from_residue(a, b, c, a).text for c in range(a)]
                text = LineGeometry.mechanical_word(line, (const.HORIZON_FACTOR + 1) * a).text
                for i in range(len(text) - a + 1):
                    if text[i:i + a] != rows[ReturnAnalyzer.start_residue(line, i)]:
                        debug_print(f"Slope {b}/{a}: position {i} does not start the factor of its residue")
                        return False
                # each class of every length must fold into one cyclic interval
                for length in range(1, a + 1):
                    classes = ReturnAnalyzer.residue_classes(a, b, length, rows)
                    for residues in classes.values():
                        try:
                            ReturnAnalyzer.interval_from_residues(a, b, residues, length)
                        except ConsistencyError as exc:
                            debug_print(f"Slope {b}/{a}, length {length}: {exc}")
                            return False
            debug_print(f"Residue correspondence holds for a={a}")
        return True

    @staticmethod
    def verify_periodic_returns(max_a: int) -> bool:
        """At most two returns for every factor (|u| <= a) of every grid-line word with a <= max_a."""
        for a in range(1, max_a + 1):
            for b in range(0, a + 1):
                if gcd(a, b) != 1:
                    continue
                for c in range(0, a + 1):
                    line = GridLine(a, b, c)
                    horizon = const.HORIZON_FACTOR * a + a
                    word = LineGeometry.mechanical_word(line, horizon)
                    for length in range(1, a + 1):
                        for u in sorted(word.factors(length)):
                            if len(word.occurrences(u)) < 2:
                                continue
                            try:
                                report = ReturnAnalyzer.returns_of_factor(line, u, horizon)
                            except ConsistencyError as exc:
                                debug_print(f"Line {line}, factor {u}: {exc}")
                                return False
                            if not report.passed:
                                debug_print(f"Line {line}, factor {u}: returns {report.distinct_returns}")
                                return False
        return True


def _two_returns_at_length(text: str, length: int) -> bool:
    """Exactly two returns for every factor of this length with enough occurrences."""
    prefix = Word(text)
    for u in sorted(prefix.factors(length)):
        if len(prefix.occurrences(u)) < const.MIN_OCCURRENCES_FOR_RETURNS:
            continue
        returns = prefix.distinct_return_words(u)
        if len(returns) != 2:
            debug_print(f"Factor {u} of the Fibonacci prefix has {len(returns)} return(s)")
            return False
    return True
