"""
Line models for Sturmian Lines.

GridLine is the canonical integer form y = (b*x + c)/a of a line with slope
and intercept in [0, 1]; DefiningLine is an exact (alpha, rho) pair from the
open unit square; FeasibilityPolygon is the half-plane system in
(alpha, rho)-space whose points all define the same word.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Tuple

from sturmian.models.errors import GridLineError
from sturmian.models.words import Word


@dataclass(frozen=True, order=True)
class GridPoint:
    """Integer point (x, y) of the plane."""

    x: int
    y: int

    def as_tuple(self) -> Tuple[int, int]:
        return (self.x, self.y)


@dataclass(frozen=True, order=True)
class GridLine:
    """
    Canonical line y = (b*x + c)/a.

    Invariants: a >= 1, 0 <= b <= a, 0 <= c <= a and gcd(a, b) = 1. Ordering
    is the canonical line order (a, b, c).
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a < 1:
            raise GridLineError(f"Denominator must be positive, got a={self.a}")
        if not 0 <= self.b <= self.a:
            raise GridLineError(f"Slope numerator out of range: b={self.b}, a={self.a}")
        if not 0 <= self.c <= self.a:
            raise GridLineError(f"Intercept numerator out of range: c={self.c}, a={self.a}")
        if gcd(self.a, self.b) != 1:
            raise GridLineError(f"Line {self.a}:{self.b}:{self.c} is not in lowest terms")

    @staticmethod
    def split_text(text: str) -> Tuple[int, int, int]:
        """The three integers of the text form "a:b:c", unchecked against the line invariants."""
        parts = text.strip().split(":")
        if len(parts) != 3:
            raise GridLineError(f"Grid line must look like a:b:c, got {text!r}")
        try:
            a, b, c = (int(part) for part in parts)
        except ValueError:
            raise GridLineError(f"Grid line parts must be integers, got {text!r}") from None
        return a, b, c

    @classmethod
    def parse(cls, text: str) -> "GridLine":
        """Parse the text form "a:b:c" (canonical values only)."""
        return cls(*cls.split_text(text))

    def __str__(self) -> str:
        return f"{self.a}:{self.b}:{self.c}"

    @property
    def slope(self) -> Fraction:
        return Fraction(self.b, self.a)

    def numerator_at(self, x: int) -> int:
        """a times the height of the line at x."""
        return self.b * x + self.c

    def value_at(self, x) -> Fraction:
        return Fraction(self.b * x + self.c, self.a)

    def has_grid_point_at(self, x: int) -> bool:
        return (self.b * x + self.c) % self.a == 0


@dataclass(frozen=True)
class DefiningLine:
    """Line y = alpha*x + rho with alpha and rho exact rationals strictly inside (0, 1)."""

    alpha: Fraction
    rho: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "rho", Fraction(self.rho))
        if not 0 < self.alpha < 1:
            raise GridLineError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not 0 < self.rho < 1:
            raise GridLineError(f"rho must lie in (0, 1), got {self.rho}")

    def __str__(self) -> str:
        return f"{self.alpha},{self.rho}"

    def value_at(self, x) -> Fraction:
        return self.alpha * x + self.rho


@dataclass(frozen=True)
class LinearConstraint:
    """Half-plane alpha_coef*alpha + rho_coef*rho >= bound (> bound when strict)."""

    alpha_coef: Fraction
    rho_coef: Fraction
    bound: Fraction
    strict: bool = False

    def holds(self, alpha: Fraction, rho: Fraction) -> bool:
        value = self.alpha_coef * alpha + self.rho_coef * rho
        return value > self.bound if self.strict else value >= self.bound

    def __str__(self) -> str:
        relation = ">" if self.strict else ">="
        return f"{self.alpha_coef}*alpha + {self.rho_coef}*rho {relation} {self.bound}"


@dataclass(frozen=True)
class FeasibilityPolygon:
    """
    Constraints s_k <= k*alpha + rho < s_k + 1 for k = 0..n plus the open unit box.

    Any point satisfying every constraint defines the word the polygon was built from.
    """

    word: Word
    constraints: Tuple[LinearConstraint, ...] = field(default_factory=tuple)

    def contains(self, alpha, rho) -> bool:
        alpha, rho = Fraction(alpha), Fraction(rho)
        return all(constraint.holds(alpha, rho) for constraint in self.constraints)
