from math import gcd

import pytest

from sturmian.analysis import CensusCalculator, LineGeometry, LineMapper
from sturmian.config import const
from sturmian.models import GridLine, GridPoint, LimitExceededError, SturmianError, Word
from sturmian.utils import totient


def test_totient():
    assert CensusCalculator.totient(9) == 6
    assert totient(1) == 1
    assert totient(12) == 4
    assert totient(7) == 6
    assert [totient(k) for k in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]
    with pytest.raises(SturmianError):
        totient(0)


def test_sturmian_count():
    assert CensusCalculator.sturmian_count(0) == 1
    assert CensusCalculator.sturmian_count(1) == 2
    assert CensusCalculator.sturmian_count(4) == 14
    assert CensusCalculator.sturmian_count(10) == 136
    with pytest.raises(SturmianError):
        CensusCalculator.sturmian_count(-1)


@pytest.mark.parametrize("n", range(0, 31))
def test_double_sum_form(n):
    assert CensusCalculator.sturmian_count_double_sum(n) == CensusCalculator.sturmian_count(n)


def test_brute_force_census_small():
    census = CensusCalculator.brute_force_census(2)
    assert (census.sturmian, census.palindromic) == (4, 2)
    assert census.palindromes == [Word("00"), Word("11")]
    census = CensusCalculator.brute_force_census(4)
    assert (census.sturmian, census.palindromic) == (14, 4)
    assert list(census.words) == sorted(census.words)


def test_brute_force_census_with_workers():
    assert CensusCalculator.brute_force_census(8, workers=2) == CensusCalculator.brute_force_census(8)


def test_brute_force_guard(monkeypatch):
    monkeypatch.setattr(const, "BRUTE_SCAN_LIMIT", 5)
    with pytest.raises(LimitExceededError):
        CensusCalculator.brute_force_census(6)
    with pytest.raises(SturmianError):
        CensusCalculator.brute_force_census(0)


@pytest.mark.parametrize("n", range(1, 13))
def test_census_methods_agree(n):
    report = CensusCalculator.census_report(n)
    assert report.consistent
    assert report.formula_count == report.brute_count == report.geometric_count
    assert report.palindrome_formula == report.palindrome_brute


def test_census_report_serializes_counts_as_strings():
    document = CensusCalculator.census_report(10, ["formula"]).to_dict()
    assert document["formula_count"] == "136"
    assert document["brute_count"] is None
    with pytest.raises(SturmianError):
        CensusCalculator.census_report(3, ["guess"])


def test_totient_identity_small():
    assert CensusCalculator.totient_sum_identity(1) == (1, 1)
    lhs, rhs = CensusCalculator.totient_sum_identity(2)
    assert lhs == rhs == 3


def test_totient_identity_up_to_sixty():
    for n in range(1, 61):
        lhs, rhs = CensusCalculator.totient_sum_identity(n)
        assert lhs == rhs, n
        assert 1 + lhs == CensusCalculator.sturmian_count(n)


@pytest.mark.parametrize("n", range(1, 15))
def test_regrouped_census(n):
    lhs, _ = CensusCalculator.totient_sum_identity(n)
    assert 1 + lhs == CensusCalculator.geometric_count(n)


def test_starred_lines():
    assert CensusCalculator.starred_lines(1) == [GridLine(1, 1, 0)]
    assert CensusCalculator.starred_lines(2) == [GridLine(1, 1, 0), GridLine(2, 1, 0)]
    for i in range(1, 16):
        lines = CensusCalculator.starred_lines(i)
        assert len(lines) == sum(totient(a) for a in range(1, i + 1))
        for line in lines:
            assert line.has_grid_point_at(i)
            assert line.numerator_at(i) // line.a >= 1
            assert LineGeometry.z_count(line, i) >= 2


def test_starred_lines_sum_to_identity():
    for n in range(1, 21):
        lhs, _ = CensusCalculator.totient_sum_identity(n)
        assert sum(len(CensusCalculator.starred_lines(i)) for i in range(1, n + 1)) == lhs


def test_palindrome_count():
    assert CensusCalculator.palindrome_count(0) == 1
    assert CensusCalculator.palindrome_count(1) == 2
    assert CensusCalculator.palindrome_count(4) == 4
    assert CensusCalculator.palindrome_count(10) == 14


def test_palindrome_lines_small():
    (entry,) = CensusCalculator.palindrome_lines(1)
    assert entry.line == GridLine(1, 0, 0)
    assert entry.params == (0, 1, 0)
    assert entry.leftmost == GridPoint(0, 0)
    assert len(CensusCalculator.palindrome_lines(2)) == 1
    assert len(CensusCalculator.palindrome_lines(10)) == 13


def test_palindrome_words_small():
    assert set(CensusCalculator.palindrome_words(1)) == {Word("0"), Word("1")}
    assert set(CensusCalculator.palindrome_words(3)) == {Word(w) for w in ("000", "111", "010", "101")}
    assert set(CensusCalculator.palindrome_words(4)) == {Word(w) for w in ("0000", "1111", "0110", "1001")}


@pytest.mark.parametrize("n", range(1, 15))
def test_palindrome_lines_invariants(n):
    lines = CensusCalculator.palindrome_lines(n)
    assert len(lines) == CensusCalculator.palindrome_count(n) - 1
    for entry in lines:
        line, i, a = entry.line, entry.i, entry.a
        assert (2 * line.c + line.b * n + 1) % a == 0
        assert i + 1 <= a <= n - i
        assert gcd(a, n - 2 * i) == 1
        assert LineGeometry.grid_points(line, n)[0] == entry.leftmost
        assert entry.leftmost.x == i


@pytest.mark.parametrize("n", range(1, 15))
def test_palindrome_formula_matches_brute_force(n):
    assert CensusCalculator.palindrome_count(n) == CensusCalculator.brute_force_census(n).palindromic


@pytest.mark.parametrize("n", range(1, 13))
def test_palindrome_words_match_brute_force(n):
    words = CensusCalculator.palindrome_words(n)
    assert len(words) == CensusCalculator.palindrome_count(n)
    assert set(words) == set(CensusCalculator.brute_force_census(n).palindromes)


@pytest.mark.parametrize("n", range(1, 13))
def test_palindrome_lines_are_bijective(n):
    for entry in CensusCalculator.palindrome_lines(n):
        word = LineMapper.through_all_word(entry.line, n)
        assert all(word.goes_through(p.x, p.y) for p in LineGeometry.grid_points(entry.line, n))
        assert LineMapper.locate_line(word) == entry.line


@pytest.mark.parametrize("n", range(1, 13))
def test_no_palindrome_on_intercept_one_lines(n):
    for line in LineGeometry.enumerate_grid_lines(n):
        if line.c == line.a:
            assert not any(word.is_palindrome() for word in LineMapper.image_words(line, n).words), line
