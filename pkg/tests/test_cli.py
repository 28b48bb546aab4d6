import json
from fractions import Fraction

import pytest

from sturmian.analysis import LineMapper
from sturmian.config import set_debug
from sturmian.main import parse_figure_line, parse_grid_line, run
from sturmian.models import DefiningLine, GridLine, GridLineError, PartitionReport, SchemaError
from sturmian.utils import document_kinds, validate_document


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_count_formula(capsys):
    code, document = run_json(capsys, ["count", "10", "--method", "formula"])
    assert code == 0
    assert document["formula_count"] == "136"
    assert document["brute_count"] is None


def test_count_brute_and_geometric(capsys):
    assert run_json(capsys, ["count", "10", "--method", "brute"])[1]["brute_count"] == "136"
    assert run_json(capsys, ["count", "10", "--method", "geometric"])[1]["geometric_count"] == "136"


def test_palindromes(capsys):
    code, document = run_json(capsys, ["palindromes", "10", "--list"])
    assert code == 0
    assert document["count"] == "14"
    assert len(document["words"]) == 14
    assert len(document["lines"]) == 13
    assert "words" not in run_json(capsys, ["palindromes", "4"])[1]


def test_map_line_worked_example(capsys):
    code, document = run_json(capsys, ["map-line", "--line", "2:1:1", "--n", "10"])
    assert code == 0
    assert document["words"] == ["1010101010", "0110101010", "0101101010", "1010101001"]
    assert document["cardinality"] == "4"


def test_map_line_accepts_unreduced_slope(capsys):
    assert run_json(capsys, ["map-line", "--line", "4:2:2", "--n", "10"])[1]["line"] == "2:1:1"


def test_locate(capsys):
    code, document = run_json(capsys, ["locate", "--word", "1010101001"])
    assert code == 0
    assert document["line"] == "2:1:1"
    assert document["split"] == {"mode": "above-first", "count": 4}


def test_returns_example(capsys):
    code, document = run_json(capsys, ["returns", "--line", "10:3:7", "--factor", "100", "--horizon", "17"])
    assert code == 0
    assert document["returns"] == ["100", "1000"]
    assert document["interval"] == {"c1": 7, "c2": 9, "wraps": False}
    assert document["residues"] == [7, 9, 8, 7, 9]
    assert document["pass"] is True


def test_extend(capsys):
    code, document = run_json(capsys, ["extend", "--word", "01"])
    assert code == 0
    assert document["extended"] == "01"
    assert document["line"] == "2:1:0"
    assert document["split"] == {"mode": "above-first", "count": 2}


@pytest.mark.parametrize("check, n", [
    ("partition", 6), ("census", 8), ("identity", 20), ("palindromes", 8), ("returns", 6),
])
def test_verify_passes(capsys, check, n):
    code, document = run_json(capsys, ["verify", check, "--n", str(n)])
    assert code == 0
    assert document["pass"] is True
    assert document["check"] == check
    assert all(entry["pass"] for entry in document["details"])


def test_verify_failure_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(LineMapper, "verify_partition", staticmethod(lambda n, workers=None: PartitionReport(n, 2, 3)))
    code, document = run_json(capsys, ["verify", "partition", "--n", "2"])
    assert code == 1
    assert document["pass"] is False


@pytest.mark.parametrize("argv", [
    [],
    ["count"],
    ["count", "ten"],
    ["map-line", "--line", "2:2:1", "--n", "10"],
    ["map-line", "--line", "10:3:7", "--n", "5"],
    ["locate", "--word", "0011"],
    ["locate", "--word", "01a"],
    ["count", "30", "--method", "brute"],
    ["verify", "census", "--n", "40"],
    ["returns", "--line", "10:3:7", "--factor", "11"],
    ["render", "--line", "2:1:1", "--n", "10", "--word", "101"],
    ["render", "--line", "2:1:1", "--n", "3", "--format", "png"],
])
def test_usage_errors_exit_two(capsys, argv):
    assert run(argv) == 2
    assert capsys.readouterr().out == ""


def test_render_svg_to_stdout(capsys):
    assert run(["render", "--line", "2:1:1", "--n", "10", "--word", "1010101001"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("<svg")
    assert out.count("<polyline") == 1
    assert out.count("<line ") == 1


def test_render_to_file(capsys, tmp_path):
    path = tmp_path / "figure.txt"
    code, document = run_json(capsys, ["render", "--line", "34/89,2/5", "--n", "11", "--format", "ascii",
                                       "--out", str(path)])
    assert code == 0
    assert document == {"format": "ascii", "path": str(path)}
    assert "word=01001010010" in path.read_text()


def test_debug_goes_to_stderr(capsys):
    try:
        assert run(["--debug", "count", "4"]) == 0
    finally:
        set_debug(False)
    captured = capsys.readouterr()
    assert json.loads(captured.out)["formula_count"] == "14"
    assert "Running count" in captured.err


def test_line_parsers():
    assert parse_grid_line("4:2:2") == GridLine(2, 1, 1)
    assert parse_figure_line("34/89,2/5") == DefiningLine(Fraction(34, 89), Fraction(2, 5))
    with pytest.raises(GridLineError):
        parse_grid_line("1:2")
    with pytest.raises(GridLineError):
        parse_grid_line("2:one:1")
    with pytest.raises(GridLineError):
        parse_figure_line("1/2")


def test_schema_rejects_malformed_documents():
    assert "census" in document_kinds()
    with pytest.raises(SchemaError):
        validate_document("census", {"n": 1})
    with pytest.raises(SchemaError):
        validate_document("image_set", {"line": "2:1:1", "n": 10, "cardinality": 4, "words": [], "splits": []})
    with pytest.raises(SchemaError):
        validate_document("nonsense", {})
