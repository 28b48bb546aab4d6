from math import gcd

from hypothesis import assume, given, strategies as st
import pytest

from sturmian.analysis import LineGeometry, ReturnAnalyzer
from sturmian.models import (
    GridLine, GridLineError, LimitExceededError, OccurrenceError, ResidueInterval, SturmianError, Word,
)

EXAMPLE_LINE = GridLine(10, 3, 7)


def test_start_residue():
    assert ReturnAnalyzer.start_residue(EXAMPLE_LINE, 0) == 7
    assert ReturnAnalyzer.start_residue(EXAMPLE_LINE, 4) == 9
    assert ReturnAnalyzer.start_residue(GridLine(1, 1, 0), 5) == 0
    with pytest.raises(SturmianError):
        ReturnAnalyzer.start_residue(EXAMPLE_LINE, -1)


def test_factor_from_residue():
    assert ReturnAnalyzer.factor_from_residue(10, 3, 7, 3) == Word("100")
    assert ReturnAnalyzer.factor_from_residue(10, 3, 9, 3) == Word("100")
    assert ReturnAnalyzer.factor_from_residue(10, 3, 6, 3) != Word("100")
    with pytest.raises(GridLineError):
        ReturnAnalyzer.factor_from_residue(10, 4, 0, 3)
    with pytest.raises(SturmianError):
        ReturnAnalyzer.factor_from_residue(10, 3, 10, 3)


def test_residue_interval_example():
    interval = ReturnAnalyzer.residue_interval(10, 3, Word("100"))
    assert (interval.c1, interval.c2, interval.wraps) == (7, 9, False)
    assert interval.residues == [7, 8, 9]
    assert interval.contact_residues == (9,)
    assert 8 in interval and 6 not in interval
    assert interval.to_dict() == {"c1": 7, "c2": 9, "wraps": False}


def test_residue_interval_empty_and_tiny():
    empty = ReturnAnalyzer.residue_interval(10, 3, Word("11"))
    assert empty.is_empty
    assert empty == ResidueInterval.empty(10)
    assert empty.to_dict() == {"c1": None, "c2": None, "wraps": False}
    tiny = ReturnAnalyzer.residue_interval(2, 1, Word("01"))
    assert (tiny.c1, tiny.c2) == (0, 0)


def test_residue_classes_partition_residues():
    classes = ReturnAnalyzer.residue_classes(10, 3, 3)
    assert classes[Word("100")] == [7, 8, 9]
    assert sorted(r for residues in classes.values() for r in residues) == list(range(10))
    assert len(classes) == 4


def test_residue_classes_from_longer_rows():
    rows = [ReturnAnalyzer.factor_from_residue(10, 3, c, 10).text for c in range(10)]
    for length in range(1, 11):
        assert ReturnAnalyzer.residue_classes(10, 3, length, rows) == ReturnAnalyzer.residue_classes(10, 3, length)
    with pytest.raises(SturmianError):
        ReturnAnalyzer.residue_classes(10, 3, 11, rows)
    with pytest.raises(SturmianError):
        ReturnAnalyzer.residue_classes(10, 3, 2, rows[:9])


def test_shift_up():
    assert ReturnAnalyzer.shift_up(EXAMPLE_LINE) == GridLine(10, 3, 8)
    assert ReturnAnalyzer.shift_up(GridLine(2, 1, 0)) == GridLine(2, 1, 1)
    with pytest.raises(GridLineError):
        ReturnAnalyzer.shift_up(GridLine(1, 0, 1))


def test_shifted_word_example():
    shifted = ReturnAnalyzer.shift_up(EXAMPLE_LINE)
    assert LineGeometry.mechanical_word(shifted, 17) == Word("10010001001001000")
    positions = ReturnAnalyzer.shifted_word_delta(EXAMPLE_LINE, 17)
    assert positions == [3, 4, 13, 14]
    before = LineGeometry.mechanical_word(EXAMPLE_LINE, 17)
    assert [before[k] for k in positions] == [0, 1, 0, 1]


@pytest.mark.parametrize("a", range(1, 13))
def test_shifted_word_delta_on_all_lines(a):
    for b in range(0, a + 1):
        if gcd(a, b) != 1:
            continue
        for c in range(0, a):
            line = GridLine(a, b, c)
            positions = ReturnAnalyzer.shifted_word_delta(line, 3 * a + 2)
            before = LineGeometry.mechanical_word(line, 3 * a + 2)
            after = LineGeometry.mechanical_word(ReturnAnalyzer.shift_up(line), 3 * a + 2)
            assert [k for k in range(len(before)) if before[k] != after[k]] == positions


def test_returns_of_example_factor():
    report = ReturnAnalyzer.returns_of_factor(EXAMPLE_LINE, Word("100"), 17)
    assert report.occurrence_positions == (0, 4, 7, 10, 14)
    assert report.start_residues == (7, 9, 8, 7, 9)
    assert report.distinct_returns == {Word("100"), Word("1000")}
    assert report.returns_by_residue == {7: Word("1000"), 9: Word("100"), 8: Word("100")}
    assert (report.interval.c1, report.interval.c2) == (7, 9)
    assert not report.complete
    assert report.passed
    document = report.to_dict()
    assert document["returns"] == ["100", "1000"]
    assert document["occurrences"] == [0, 4, 7, 10, 14]


def test_returns_default_horizon():
    report = ReturnAnalyzer.returns_of_factor(EXAMPLE_LINE, Word("0"))
    assert report.horizon == 41
    assert report.complete
    assert report.distinct_returns == {Word("0"), Word("01")}


def test_returns_of_periodic_word():
    report = ReturnAnalyzer.returns_of_factor(GridLine(2, 1, 1), Word("10"), 20)
    assert report.distinct_returns == {Word("10")}
    assert report.passed


def test_returns_need_two_occurrences():
    with pytest.raises(OccurrenceError):
        ReturnAnalyzer.returns_of_factor(EXAMPLE_LINE, Word("11"), 17)


def test_two_returns_on_fibonacci_prefixes():
    assert ReturnAnalyzer.verify_two_returns_aperiodic(1, 100)
    assert ReturnAnalyzer.verify_two_returns_aperiodic(10, 5000)
    assert ReturnAnalyzer.verify_two_returns_aperiodic(20, 10000)


def test_two_returns_with_workers():
    assert ReturnAnalyzer.verify_two_returns_aperiodic(5, 1000, workers=2)


def test_two_returns_guard():
    with pytest.raises(LimitExceededError):
        ReturnAnalyzer.verify_two_returns_aperiodic(10, 999)


def test_periodic_returns():
    assert ReturnAnalyzer.verify_periodic_returns(8)


def test_residue_correspondence_grid():
    assert ReturnAnalyzer.verify_residue_correspondence(40)


@given(st.integers(min_value=2, max_value=40), st.data())
def test_occurrences_follow_residues(a, data):
    b = data.draw(st.integers(min_value=1, max_value=a - 1))
    assume(gcd(a, b) == 1)
    c = data.draw(st.integers(min_value=0, max_value=a))
    length = data.draw(st.integers(min_value=1, max_value=a))
    line = GridLine(a, b, c)
    word = LineGeometry.mechanical_word(line, 4 * a)
    u = word[:length]
    interval = ReturnAnalyzer.residue_interval(a, b, u)
    expected = [i for i in range(4 * a - length + 1) if ReturnAnalyzer.start_residue(line, i) in interval]
    assert word.occurrences(u) == expected
    assert interval.contact_residues == (interval.c2,)
