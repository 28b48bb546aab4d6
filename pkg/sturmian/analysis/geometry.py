"""
Geometry module - Exact lines, grid points and the feasibility-polygon oracle.

All arithmetic is exact: rationals are fractions.Fraction and floors of
rationals are integer divisions, so words on the boundary of a defining
region are never misclassified.
"""
from fractions import Fraction
from math import floor, gcd
from typing import List, Optional, Sequence, Tuple

from sturmian.config.constants import debug_print
from sturmian.models.errors import GridLineError, InvalidWordError, NotSturmianError, SturmianError
from sturmian.models.lines import DefiningLine, FeasibilityPolygon, GridLine, GridPoint, LinearConstraint
from sturmian.models.words import Word
from sturmian.utils.helpers import modular_inverse

# Continued fraction of (3 - sqrt(5))/2 is [0; 2, 1, 1, 1, ...]
_GOLDEN_SLOPE_HEAD = (0, 2)

# Bound on alpha: (value, strict); None means unbounded
_Bound = Optional[Tuple[Fraction, bool]]


class LineGeometry:
    """Grid lines, their integer points and the words they generate."""

    @staticmethod
    def make_grid_line(a: int, b: int, c: int) -> GridLine:
        """
        Canonical GridLine for y = (b*x + c)/a.

        b/a is reduced to lowest terms and c is rescaled with it; input whose
        intercept would stop being integral after the reduction is rejected.

        Args:
            a: Denominator, at least 1
            b: Slope numerator with 0 <= b <= a
            c: Intercept numerator with 0 <= c <= a

        Returns:
            The canonical grid line
        """
        if a < 1:
            raise GridLineError(f"Denominator must be positive, got a={a}")
        if not 0 <= b <= a:
            raise GridLineError(f"Slope numerator out of range: b={b}, a={a}")
        if not 0 <= c <= a:
            raise GridLineError(f"Intercept numerator out of range: c={c}, a={a}")
        g = gcd(a, b)
        if c % g != 0:
            raise GridLineError(
                f"Line {a}:{b}:{c} reduces to slope {b // g}/{a // g} but intercept {c}/{a} "
                f"has no numerator over {a // g}"
            )
        return GridLine(a // g, b // g, c // g)

    @staticmethod
    def first_grid_x(line: GridLine) -> int:
        """Smallest x >= 0 at which the line has an integer point (always < a)."""
        if line.a == 1:
            return 0
        return (-line.c * modular_inverse(line.b, line.a)) % line.a

    @staticmethod
    def grid_points(line: GridLine, n: int) -> List[GridPoint]:
        """All integer points of the line with 0 <= x <= n, sorted by x (consecutive ones are a apart)."""
        if n < 0:
            raise SturmianError(f"Grid size must be non-negative, got n={n}")
        start = LineGeometry.first_grid_x(line)
        return [GridPoint(x, line.numerator_at(x) // line.a) for x in range(start, n + 1, line.a)]

    @staticmethod
    def z_count(line: GridLine, n: int) -> int:
        """Number of integer points with 0 <= x <= n."""
        start = LineGeometry.first_grid_x(line)
        return 0 if start > n else (n - start) // line.a + 1

    @staticmethod
    def z_half(line: GridLine, n: int) -> int:
        """Number of integer points with 0 <= 2x <= n."""
        return LineGeometry.z_count(line, n // 2)

    @staticmethod
    def enumerate_grid_lines(n: int) -> List[GridLine]:
        """
        The line set L_n in canonical (a, b, c) order.

        Two grid points at most n apart force a <= n, so the scan is finite.
        """
        if n < 1:
            raise SturmianError(f"L_n is defined for n >= 1, got n={n}")
        lines = []
        for a in range(1, n + 1):
            for b in range(0, a + 1):
                # Only reduced slopes are canonical
                if gcd(a, b) != 1:
                    continue
                # Keep intercepts giving at least two points in the grid
                for c in range(0, a + 1):
                    line = GridLine(a, b, c)
                    if LineGeometry.z_count(line, n) >= 2:
                        lines.append(line)
        debug_print(f"Enumerated {len(lines)} grid lines for n={n}")
        return lines

    @staticmethod
    def is_boundary_line(line: GridLine) -> bool:
        """True for y = 0, y = 1, y = x and y = x + 1."""
        return line.a == 1

    @staticmethod
    def mechanical_word(line: GridLine, n: int) -> Word:
        """Word with letters floor((b(k+1)+c)/a) - floor((bk+c)/a) for k = 0..n-1."""
        a, b, c = line.a, line.b, line.c
        return Word.from_letters((b * (k + 1) + c) // a - (b * k + c) // a for k in range(n))

    @staticmethod
    def word_from_defining_line(alpha, rho, n: int) -> Word:
        """
        Word of the defining line y = alpha*x + rho.

        Args:
            alpha: Exact slope in (0, 1)
            rho: Exact intercept in (0, 1)
            n: Word length, at least 1

        Returns:
            Word with letters floor((k+1)alpha + rho) - floor(k*alpha + rho)
        """
        line = DefiningLine(alpha, rho)
        if n < 1:
            raise SturmianError(f"Word length must be positive, got n={n}")
        heights = [floor(line.value_at(k)) for k in range(n + 1)]
        return Word.from_letters(heights[k + 1] - heights[k] for k in range(n))

    @staticmethod
    def continued_fraction_convergents(terms: Sequence[int]) -> List[Fraction]:
        """Convergents p_k/q_k of the continued fraction [t0; t1, t2, ...]."""
        convergents = []
        # Seed the recurrences with p_-1/q_-1 = 1/0 and p_0/q_0 = t0/1
        p_prev, p = 1, terms[0] if terms else 0
        q_prev, q = 0, 1
        if terms:
            convergents.append(Fraction(p, q))
        for term in terms[1:]:
            p_prev, p = p, term * p + p_prev
            q_prev, q = q, term * q + q_prev
            convergents.append(Fraction(p, q))
        return convergents

    @staticmethod
    def golden_slope_convergent(n: int) -> Fraction:
        """
        Convergent p/q of (3 - sqrt(5))/2 with q > n^2.

        Such a convergent reproduces the first n letters of the irrational slope
        whenever no constraint is within 1/q of being tight.
        """
        terms = list(_GOLDEN_SLOPE_HEAD)
        # Append partial quotients 1 until the denominator is large enough
        while True:
            convergent = LineGeometry.continued_fraction_convergents(terms)[-1]
            if convergent.denominator > n * n:
                return convergent
            terms.append(1)

    @staticmethod
    def feasibility_polygon(word: Word) -> FeasibilityPolygon:
        """Half-plane system s_k <= k*alpha + rho < s_k + 1 (k = 0..n) inside the open unit box."""
        if len(word) < 1:
            raise InvalidWordError("The feasibility polygon needs a non-empty word")
        # Open unit box: 0 < alpha < 1, 0 < rho < 1
        constraints = [
            LinearConstraint(Fraction(1), Fraction(0), Fraction(0), True),
            LinearConstraint(Fraction(-1), Fraction(0), Fraction(-1), True),
            LinearConstraint(Fraction(0), Fraction(1), Fraction(0), True),
            LinearConstraint(Fraction(0), Fraction(-1), Fraction(-1), True),
        ]
        # One band per height of the broken line: lower edge closed, upper edge open
        for k, height in enumerate(word.heights()):
            constraints.append(LinearConstraint(Fraction(k), Fraction(1), Fraction(height), False))
            constraints.append(LinearConstraint(Fraction(-k), Fraction(-1), Fraction(-(height + 1)), True))
        return FeasibilityPolygon(word, tuple(constraints))

    @staticmethod
    def _eliminate_rho(constraints: Sequence[LinearConstraint]) -> List[LinearConstraint]:
        """Fourier-Motzkin step: the alpha-only system whose solutions extend to some rho."""
        # Split by the sign of the rho coefficient
        lower = [c for c in constraints if c.rho_coef > 0]
        upper = [c for c in constraints if c.rho_coef < 0]
        result = [c for c in constraints if c.rho_coef == 0]

        # Pair every lower bound on rho with every upper bound
        for low in lower:
            for up in upper:
                # Positive combination cancelling rho; strict if either side is strict
                weight_low, weight_up = -up.rho_coef, low.rho_coef
                result.append(LinearConstraint(
                    weight_low * low.alpha_coef + weight_up * up.alpha_coef,
                    Fraction(0),
                    weight_low * low.bound + weight_up * up.bound,
                    low.strict or up.strict,
                ))
        return result

    @staticmethod
    def _tighter_lower(current: _Bound, candidate: Tuple[Fraction, bool]) -> _Bound:
        if current is None or candidate[0] > current[0]:
            return candidate
        if candidate[0] == current[0]:
            return (current[0], current[1] or candidate[1])
        return current

    @staticmethod
    def _tighter_upper(current: _Bound, candidate: Tuple[Fraction, bool]) -> _Bound:
        if current is None or candidate[0] < current[0]:
            return candidate
        if candidate[0] == current[0]:
            return (current[0], current[1] or candidate[1])
        return current

    @staticmethod
    def _interval(constraints: Sequence[LinearConstraint], coef) -> Optional[Tuple[_Bound, _Bound]]:
        """
        Solution interval of single-variable constraints coef(c)*v >= bound.

        Returns None when the system is infeasible.
        """
        low: _Bound = None
        high: _Bound = None
        for constraint in constraints:
            factor = coef(constraint)
            if factor == 0:  # Constant: either always or never true
                satisfied = 0 > constraint.bound if constraint.strict else 0 >= constraint.bound
                if not satisfied:
                    return None
            elif factor > 0:
                low = LineGeometry._tighter_lower(low, (constraint.bound / factor, constraint.strict))
            else:
                high = LineGeometry._tighter_upper(high, (constraint.bound / factor, constraint.strict))

        # Crossed bounds, or a single point excluded by a strict side
        if low is not None and high is not None:
            if low[0] > high[0] or (low[0] == high[0] and (low[1] or high[1])):
                return None
        return (low, high)

    @staticmethod
    def _pick(low: _Bound, high: _Bound) -> Fraction:
        """Deterministic point of a non-empty interval: the midpoint when bounded."""
        if low is None and high is None:
            return Fraction(0)
        if low is None:
            return high[0] - 1
        if high is None:
            return low[0] + 1
        return (low[0] + high[0]) / 2

    @staticmethod
    def alpha_interval(polygon: FeasibilityPolygon) -> Optional[Tuple[_Bound, _Bound]]:
        """Projection of the polygon on the alpha axis, or None if the polygon is empty."""
        projected = LineGeometry._eliminate_rho(polygon.constraints)
        return LineGeometry._interval(projected, lambda c: c.alpha_coef)

    @staticmethod
    def is_finite_sturmian(word: Word) -> bool:
        """True iff some (alpha, rho) in the open unit square defines the word."""
        if len(word) == 0:
            return True
        return LineGeometry.alpha_interval(LineGeometry.feasibility_polygon(word)) is not None

    @staticmethod
    def sample_defining_line(word: Word) -> DefiningLine:
        """
        A deterministic rational defining line of the word.

        alpha is the midpoint of the polygon's projection on the alpha axis and
        rho the midpoint of the polygon's slice at that alpha, so the point is
        strictly inside every open constraint.

        Raises:
            NotSturmianError: if the polygon is empty
        """
        polygon = LineGeometry.feasibility_polygon(word)
        interval = LineGeometry.alpha_interval(polygon)
        if interval is None:
            raise NotSturmianError(f"Word {word} is not finite Sturmian: its feasibility polygon is empty")
        alpha = LineGeometry._pick(*interval)
        # Substitute alpha and solve for rho
        sliced = [
            LinearConstraint(Fraction(0), c.rho_coef, c.bound - c.alpha_coef * alpha, c.strict)
            for c in polygon.constraints
        ]
        rho_interval = LineGeometry._interval(sliced, lambda c: c.rho_coef)
        if rho_interval is None:
            raise NotSturmianError(f"Word {word}: empty rho slice at alpha={alpha}")
        low, high = rho_interval
        # A closed single-point slice still has one valid rho
        if low is not None and high is not None and low[0] == high[0]:
            rho = low[0]
        else:
            rho = LineGeometry._pick(low, high)
        debug_print(f"Sampled defining line alpha={alpha}, rho={rho} for {word}")
        return DefiningLine(alpha, rho)
