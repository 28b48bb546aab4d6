"""
Utilities module for Sturmian Lines.

This package contains number theory helpers, text parsers and the output
schema checks.
"""

from .helpers import (
    totient, extended_gcd, modular_inverse, ceil_div, parse_rational,
    all_binary_words, binary_words_with_prefix,
)
from .schema import load_schema, validate_document, document_kinds

__all__ = [
    'totient', 'extended_gcd', 'modular_inverse', 'ceil_div', 'parse_rational',
    'all_binary_words', 'binary_words_with_prefix',
    'load_schema', 'validate_document', 'document_kinds',
]
