"""
Helper utilities for Sturmian Lines.
"""
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Tuple

from sturmian.models.errors import SturmianError
from sturmian.models.words import Word


def totient(k: int) -> int:
    """
    Euler's totient by trial factorization.

    Args:
        k: Positive integer

    Returns:
        Number of 1 <= m <= k with gcd(m, k) = 1
    """
    if k < 1:
        raise SturmianError(f"Totient is defined for positive integers, got {k}")
    result = k
    remaining = k
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            while remaining % p == 0:
                remaining //= p
            result -= result // p
        p += 1
    if remaining > 1:
        result -= result // remaining
    return result


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def modular_inverse(value: int, modulus: int) -> int:
    """Inverse of value modulo modulus, normalized to [0, modulus)."""
    if modulus < 1:
        raise SturmianError(f"Modulus must be positive, got {modulus}")
    if modulus == 1:
        return 0
    g, x, _ = extended_gcd(value % modulus, modulus)
    if g != 1:
        raise SturmianError(f"{value} has no inverse modulo {modulus}")
    return x % modulus


def ceil_div(numerator: int, denominator: int) -> int:
    """Ceiling of numerator/denominator for a positive denominator."""
    return -((-numerator) // denominator)


def parse_rational(text: str) -> Fraction:
    """Parse the text form "p/q" (or a plain integer) into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise SturmianError(f"Not an exact rational: {text!r}") from None


def all_binary_words(n: int) -> Iterator[Word]:
    """Every binary word of length n in lexicographic order."""
    for letters in product("01", repeat=n):
        yield Word("".join(letters))


def binary_words_with_prefix(prefix: str, n: int) -> List[Word]:
    """Every binary word of length n starting with the given prefix, lexicographically."""
    return [Word(prefix + "".join(rest)) for rest in product("01", repeat=n - len(prefix))]
