"""
Sturmian Lines - Main Entry Point

This is the command-line front end: it parses arguments, dispatches to the
analysis engines, prints JSON documents on stdout and maps failures to exit
codes (0 success, 1 failed verification, 2 usage error).
"""
import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from sturmian import __version__
from sturmian.analysis import CensusCalculator, LineGeometry, LineMapper, ReturnAnalyzer
from sturmian.config.constants import const, debug_print, set_debug
from sturmian.models import (
    ConsistencyError, DefiningLine, GridLine, GridLineError, LimitExceededError, RenderSpec,
    SturmianError, Word,
)
from sturmian.ui import FigureRenderer
from sturmian.utils import parse_rational, validate_document

VERIFY_CHECKS = ("partition", "census", "identity", "palindromes", "returns")

# (document kind, document, exit code)
Outcome = Tuple[str, Dict[str, Any], int]


def parse_grid_line(text: str) -> GridLine:
    """Parse "a:b:c", reducing the slope to lowest terms."""
    return LineGeometry.make_grid_line(*GridLine.split_text(text))


def parse_figure_line(text: str) -> Union[GridLine, DefiningLine]:
    """Parse either a grid line "a:b:c" or a defining line "alpha,rho"."""
    if ":" in text:
        return parse_grid_line(text)
    parts = text.split(",")
    if len(parts) != 2:
        raise GridLineError(f"Line must be a:b:c or alpha,rho, got {text!r}")
    return DefiningLine(parse_rational(parts[0]), parse_rational(parts[1]))


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="sturmian",
        description=f"Sturmian Lines v{__version__}: grid lines and finite Sturmian words",
    )
    parser.add_argument("--debug", action="store_true", help="Print progress on stderr")
    parser.add_argument("--workers", type=int, default=None,
                        help="Worker processes for exhaustive scans (default: run in-process)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_count = subparsers.add_parser("count", help="Count Sturmian words of length n")
    p_count.add_argument("n", type=int)
    p_count.add_argument("--method", choices=["formula", "brute", "geometric"], default="formula",
                         help="Counting method (default: formula)")

    p_pal = subparsers.add_parser("palindromes", help="Count Sturmian palindromes of length n")
    p_pal.add_argument("n", type=int)
    p_pal.add_argument("--list", action="store_true", help="Also list the palindromes and their lines")

    p_map = subparsers.add_parser("map-line", help="Image set m(line) of a grid line")
    p_map.add_argument("--line", required=True, help="Grid line a:b:c for y = (bx + c)/a")
    p_map.add_argument("--n", type=int, required=True)

    p_locate = subparsers.add_parser("locate", help="Grid line whose image set holds a word")
    p_locate.add_argument("--word", required=True)

    p_verify = subparsers.add_parser("verify", help="Run a property check up to n")
    p_verify.add_argument("check", choices=VERIFY_CHECKS)
    p_verify.add_argument("--n", type=int, required=True)

    p_returns = subparsers.add_parser("returns", help="Return words of a factor in a grid-line word")
    p_returns.add_argument("--line", required=True)
    p_returns.add_argument("--factor", required=True)
    p_returns.add_argument("--horizon", type=int, default=None,
                           help="Word length to scan (default: 4a + |factor|)")

    p_render = subparsers.add_parser("render", help="Draw a line and a word on the grid")
    p_render.add_argument("--line", required=True, help="a:b:c or alpha,rho")
    p_render.add_argument("--n", type=int, required=True)
    p_render.add_argument("--word", default=None)
    p_render.add_argument("--format", choices=["svg", "ascii", "png"], default="svg")
    p_render.add_argument("--cell-size", type=int, default=const.CELL_SIZE)
    p_render.add_argument("--out", default=None, help="Output path (default: stdout; required for png)")

    p_extend = subparsers.add_parser("extend", help="Extend a word to full contact with a grid line")
    p_extend.add_argument("--word", required=True)

    return parser


def _cmd_count(args) -> Outcome:
    report = CensusCalculator.census_report(args.n, [args.method], args.workers)
    return "census", report.to_dict(), const.EXIT_OK


def _cmd_palindromes(args) -> Outcome:
    document = {"n": args.n, "count": str(CensusCalculator.palindrome_count(args.n))}
    if args.list:
        document["words"] = [str(word) for word in CensusCalculator.palindrome_words(args.n)]
        document["lines"] = [entry.to_dict() for entry in CensusCalculator.palindrome_lines(args.n)]
    return "palindromes", document, const.EXIT_OK


def _cmd_map_line(args) -> Outcome:
    image = LineMapper.image_words(parse_grid_line(args.line), args.n)
    return "image_set", image.to_dict(), const.EXIT_OK


def _cmd_locate(args) -> Outcome:
    word = Word.parse(args.word)
    line, split = LineMapper.locate_split(word)
    document = {
        "word": str(word),
        "line": str(line),
        "split": split.to_dict(),
        "defining_line": str(LineGeometry.sample_defining_line(word)),
    }
    return "locate", document, const.EXIT_OK


def _cmd_returns(args) -> Outcome:
    report = ReturnAnalyzer.returns_of_factor(parse_grid_line(args.line), Word.parse(args.factor), args.horizon)
    return "returns", report.to_dict(), const.EXIT_OK if report.passed else const.EXIT_FAILED


def _cmd_extend(args) -> Outcome:
    word = Word.parse(args.word)
    extended, line = LineMapper.extend_to_full_contact(word)
    split = LineMapper.image_words(line, len(extended)).split_of(extended)
    if split is None:
        raise ConsistencyError(f"Extension {extended} is not in the image set of {line}")
    document = {
        "word": str(word),
        "extended": str(extended),
        "line": str(line),
        "n0": len(extended),
        "split": split.to_dict(),
    }
    return "extend", document, const.EXIT_OK


def _verify_partition(n: int, workers: Optional[int]) -> List[Dict[str, Any]]:
    return [LineMapper.verify_partition(m, workers).to_dict() for m in range(1, n + 1)]


def _verify_census(n: int, workers: Optional[int]) -> List[Dict[str, Any]]:
    details = []
    for m in range(1, n + 1):
        report = CensusCalculator.census_report(m, workers=workers)
        # Regrouped and double-sum forms must agree with the closed form
        lhs, _ = CensusCalculator.totient_sum_identity(m)
        regrouped = 1 + lhs == report.formula_count
        double_sum = CensusCalculator.sturmian_count_double_sum(m) == report.formula_count
        details.append(dict(report.to_dict(), **{"pass": report.consistent and regrouped and double_sum}))
    return details


def _verify_identity(n: int, workers: Optional[int]) -> List[Dict[str, Any]]:
    details = []
    for m in range(1, n + 1):
        lhs, rhs = CensusCalculator.totient_sum_identity(m)
        details.append({"n": m, "lhs": str(lhs), "rhs": str(rhs), "pass": lhs == rhs})
    return details


def _verify_palindromes(n: int, workers: Optional[int]) -> List[Dict[str, Any]]:
    details = []
    for m in range(1, n + 1):
        brute = CensusCalculator.brute_force_census(m, workers)
        constructed = CensusCalculator.palindrome_words(m)
        # Each constructed line must be the one its word maps back to
        bijective = all(
            LineMapper.locate_line(LineMapper.through_all_word(entry.line, m)) == entry.line
            for entry in CensusCalculator.palindrome_lines(m)
        )
        formula = CensusCalculator.palindrome_count(m)
        details.append({
            "n": m,
            "palindrome_formula": str(formula),
            "palindrome_brute": str(brute.palindromic),
            "pass": formula == brute.palindromic and set(constructed) == set(brute.palindromes) and bijective,
        })
    return details


def _verify_returns(n: int, workers: Optional[int]) -> List[Dict[str, Any]]:
    prefix_len = const.APERIODIC_RATIO * n
    return [
        {"check": "residue-correspondence", "max_a": n,
         "pass": ReturnAnalyzer.verify_residue_correspondence(n)},
        {"check": "periodic-returns", "max_a": n,
         "pass": ReturnAnalyzer.verify_periodic_returns(n)},
        {"check": "fibonacci-two-returns", "max_factor_len": n, "prefix_len": prefix_len,
         "pass": ReturnAnalyzer.verify_two_returns_aperiodic(n, prefix_len, workers)},
    ]


_VERIFIERS = {
    "partition": _verify_partition,
    "census": _verify_census,
    "identity": _verify_identity,
    "palindromes": _verify_palindromes,
    "returns": _verify_returns,
}


def _cmd_verify(args) -> Outcome:
    if args.n < 1:
        raise SturmianError(f"verify needs --n >= 1, got {args.n}")
    if args.check in ("census", "palindromes") and args.n > const.BRUTE_CENSUS_LIMIT:
        raise LimitExceededError(
            f"n={args.n} exceeds the exhaustive bound {const.BRUTE_CENSUS_LIMIT} (set STURMIAN_BRUTE_LIMIT to raise it)"
        )
    details = _VERIFIERS[args.check](args.n, args.workers)
    passed = all(entry["pass"] for entry in details)
    document = {"check": args.check, "n": args.n, "pass": passed, "details": details}
    return "verify", document, const.EXIT_OK if passed else const.EXIT_FAILED


def _cmd_render(args) -> Optional[Outcome]:
    word = Word.parse(args.word) if args.word is not None else None
    spec = RenderSpec(parse_figure_line(args.line), args.n, word, args.format, args.cell_size)
    document = FigureRenderer.render(spec, args.out)
    if args.out is None:
        sys.stdout.write(document)
        return None
    return "render", {"format": args.format, "path": args.out}, const.EXIT_OK


_COMMANDS = {
    "count": _cmd_count,
    "palindromes": _cmd_palindromes,
    "map-line": _cmd_map_line,
    "locate": _cmd_locate,
    "verify": _cmd_verify,
    "returns": _cmd_returns,
    "render": _cmd_render,
    "extend": _cmd_extend,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Exit code
    """
    # Parse arguments
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return const.EXIT_USAGE if exc.code not in (0, None) else const.EXIT_OK

    if args.debug:
        set_debug(True)
    debug_print(f"Running {args.command} with {vars(args)}")

    # Dispatch command
    try:
        outcome = _COMMANDS[args.command](args)
    except ConsistencyError as e:
        print(f"error: {e}", file=sys.stderr)
        return const.EXIT_FAILED
    except SturmianError as e:
        print(f"error: {e}", file=sys.stderr)
        return const.EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return const.EXIT_USAGE
    except Exception as e:
        print(f"Fatal error: {e}", file=sys.stderr)
        import traceback
        debug_print(traceback.format_exc())
        return const.EXIT_FAILED

    if outcome is None:
        return const.EXIT_OK
    kind, document, code = outcome
    # Check the document shape before printing it
    try:
        validate_document(kind, document)
    except ConsistencyError as e:
        print(f"error: {e}", file=sys.stderr)
        return const.EXIT_FAILED
    print(json.dumps(document, indent=2))
    return code


def main():
    """Main entry point function."""
    sys.exit(run())


if __name__ == "__main__":
    main()
