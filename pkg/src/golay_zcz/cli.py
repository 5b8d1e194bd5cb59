#!/usr/bin/env python
"""
CLI interface for golay-zcz

Exit status: 0 verified/success, 1 verification failed, 2 usage, parse or
domain error, 3 search timeout.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from pydantic import ValidationError

# Add parent directory to path to import golay_zcz
sys.path.insert(0, str(Path(__file__).parent.parent))

from golay_zcz.ccc import compare_with_remark, kronecker_ccc, reachable_lengths, transpose_ccc, verify_ccc
from golay_zcz.correlation import accf, pccf
from golay_zcz.errors import GolayZczError, ShapeError
from golay_zcz.fileio import read_code, read_sequence_set, write_code, write_profile_csv, write_sequence_set
from golay_zcz.golay import GolayPair, SignQuadruple, build_theorem1_pair, golay_mate, mate_property, verify_gcp
from golay_zcz.logger import set_level, setup_file_logger, setup_logger
from golay_zcz.models import SearchConfig
from golay_zcz.search import search_ccc
from golay_zcz.seeds import list_seeds, seed_registry
from golay_zcz.seqcore import ComplementarySet
from golay_zcz.zczset import build_theorem2_set, measure_golay_zcz, tang_fan_bound, verify_golay_zcz

logger = setup_logger(__name__)

OK, FAILED, USAGE, TIMEOUT = 0, 1, 2, 3

Outcome = Tuple[int, List[str]]


class UsageError(GolayZczError):
    pass


class _Parser(argparse.ArgumentParser):
    """Argument errors become exceptions instead of exiting the process."""

    def error(self, message):
        raise UsageError(message)


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _read_pair(path: str) -> Tuple[GolayPair, Optional[GolayPair]]:
    """A 2-row file is a pair; a 4-row file is a pair followed by its mate."""
    cs = read_sequence_set(path)
    if cs.set_size == 2:
        return GolayPair(*cs.rows), None
    if cs.set_size == 4:
        return GolayPair(*cs.rows[:2]), GolayPair(*cs.rows[2:])
    raise ShapeError(f"{path}: expected 2 or 4 rows, found {cs.set_size}")


# ==================================================
# COMMANDS
# ==================================================

def _cmd_verify_gcp(args) -> Outcome:
    pair, _ = _read_pair(args.input)
    ok = verify_gcp(pair.a, pair.b)
    return (OK if ok else FAILED), [f"GCP length {pair.length}: {_verdict(ok)}"]


def _cmd_mate(args) -> Outcome:
    pair, _ = _read_pair(args.input)
    mate = golay_mate(pair)
    write_sequence_set(args.output, mate.as_set())
    ok = mate_property(pair, mate)
    return (OK if ok else FAILED), [
        f"Golay mate written to {args.output}",
        f"mate property: {_verdict(ok)}",
    ]


def _cmd_build_pair(args) -> Outcome:
    pair, mate = _read_pair(args.input)
    if mate is None:
        mate = golay_mate(pair)
    signs = SignQuadruple.parse(args.signs)
    p, q = build_theorem1_pair(pair, mate, signs)
    write_sequence_set(args.output, ComplementarySet((p, q)))
    report = verify_golay_zcz([p, q], pair.length)
    lines = [f"(2,{p.length},{pair.length}) pair written to {args.output}"]
    lines.extend(report.summary())
    return (OK if report.passed else FAILED), lines


def _cmd_verify_gzcz(args) -> Outcome:
    cs = read_sequence_set(args.input)
    report = verify_golay_zcz(list(cs.rows), args.claimed_z, args.alphabet)
    return (OK if report.passed else FAILED), report.summary()


def _cmd_build_set(args) -> Outcome:
    code = read_code(args.input)
    sequences = build_theorem2_set(code)
    write_sequence_set(args.output, ComplementarySet(tuple(sequences)))
    m, n = code.set_size, code.length
    lines = [f"({m},{sequences[0].length},{(m - 1) * n}) set written to {args.output}"]
    if m > 1:
        report = verify_golay_zcz(sequences, (m - 1) * n)
        lines.extend(report.summary())
        return (OK if report.passed else FAILED), lines
    return OK, lines


def _cmd_ccc_verify(args) -> Outcome:
    code = read_code(args.input)
    ok = verify_ccc(code)
    m, _, n = code.shape
    return (OK if ok else FAILED), [f"CCC ({m},{m},{n}): {_verdict(ok)}"]


def _cmd_ccc_transpose(args) -> Outcome:
    code = transpose_ccc(read_code(args.input))
    write_code(args.output, code)
    ok = verify_ccc(code)
    return (OK if ok else FAILED), [f"transposed code written to {args.output}", f"CCC check: {_verdict(ok)}"]


def _cmd_ccc_kron(args) -> Outcome:
    code = kronecker_ccc(read_code(args.first), read_code(args.second))
    write_code(args.output, code)
    ok = verify_ccc(code)
    m, _, n = code.shape
    return (OK if ok else FAILED), [f"({m},{m},{n}) code written to {args.output}", f"CCC check: {_verdict(ok)}"]


def _cmd_seeds(args) -> Outcome:
    if args.list:
        lines = []
        for name in list_seeds():
            m, _, n = seed_registry(name).shape
            lines.append(f"{name}  ({m},{m},{n})")
        return OK, lines
    if not args.output:
        raise UsageError("seeds --get needs an output file")
    code = seed_registry(args.get)
    write_code(args.output, code)
    return OK, [f"{args.get} written to {args.output}"]


def _solution_path(output: str, index: int) -> Path:
    path = Path(output)
    if index == 0:
        return path
    return path.with_name(f"{path.stem}_{index}{path.suffix}")


def _cmd_search_ccc(args) -> Outcome:
    config = SearchConfig(
        set_size=args.M,
        length=args.N,
        timeout_seconds=args.timeout,
        max_solutions=args.max,
        symmetry_reduction=not args.no_symmetry,
        pruning=not args.no_pruning,
        workers=args.workers,
    )
    result = search_ccc(config)
    lines = []
    for index, code in enumerate(result.codes):
        path = _solution_path(args.output, index)
        write_code(path, code)
        lines.append(f"solution {index} written to {path}")
    lines.append(
        f"nodes={result.nodes} prunes={result.prunes} solutions={result.solutions}"
        f"{' (timed out)' if result.timed_out else ''}"
    )
    if result.timed_out:
        return TIMEOUT, lines
    return (OK if result.codes else FAILED), lines


def _cmd_report(args) -> Outcome:
    cs = read_sequence_set(args.input)
    indices = (args.i, args.j) if args.mode == "cross" else (args.i,)
    for index in indices:
        if not 0 <= index < cs.set_size:
            raise UsageError(f"row index {index} outside 0..{cs.set_size - 1}")
    a = cs.rows[args.i]
    b = a if args.mode == "auto" else cs.rows[args.j]
    profile = pccf(a, b) if args.periodic else accf(a, b)
    write_profile_csv(args.csv, profile)
    kind = "periodic" if args.periodic else "aperiodic"
    return OK, [f"{kind} {args.mode} profile ({len(profile)} shifts) written to {args.csv}"]


def _cmd_bound(args) -> Outcome:
    cs = read_sequence_set(args.input)
    report = measure_golay_zcz(list(cs.rows), args.alphabet)
    z_opti = tang_fan_bound(report.length, report.set_size, args.alphabet)
    return OK, [
        f"M={report.set_size} L={report.length} Zmin={report.z_min}",
        f"Z_opti ({args.alphabet}) = {z_opti}",
        f"C = {report.optimality_factor}",
    ]


def _cmd_lengths(args) -> Outcome:
    reached = reachable_lengths(args.bound)
    common, ours_only, printed_only = compare_with_remark(args.bound)
    return OK, [
        "reachable: " + " ".join(str(n) for n in reached),
        "in both lists: " + " ".join(str(n) for n in common),
        "only reachable here: " + " ".join(str(n) for n in ours_only),
        "only in printed list: " + " ".join(str(n) for n in printed_only),
    ]


# ==================================================
# PARSER
# ==================================================

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="golay-zcz",
        description="Construct and verify Golay pairs, complete complementary codes and Golay-ZCZ sets",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Check a Golay pair and build a (2,40,10) Golay-ZCZ pair from it:
  python run_cli.py verify-gcp fixtures/example1_gcp.txt
  python run_cli.py build-pair fixtures/example1_gcp.txt --signs 1,1,1,-1 pair.txt

  # Golay-ZCZ set from the (4,4,4) seed:
  python run_cli.py seeds --get example3-N4 ccc4.txt
  python run_cli.py build-set ccc4.txt set64.txt

  # Correlation CSV for plotting:
  python run_cli.py report pair.txt --mode auto --i 0 --periodic --csv pacf.csv
        """
    )
    parser.add_argument('--verbose', action='store_true', help='Debug logging')
    parser.add_argument('--log-file', metavar='PATH', help='Also write log records to this file')

    subparsers = parser.add_subparsers(dest='command', help='Commands')

    p = subparsers.add_parser('verify-gcp', help='Check that a 2-row file is a Golay pair')
    p.add_argument('input')
    p.set_defaults(handler=_cmd_verify_gcp)

    p = subparsers.add_parser('mate', help='Write the Golay mate of a pair')
    p.add_argument('input')
    p.add_argument('output')
    p.set_defaults(handler=_cmd_mate)

    p = subparsers.add_parser('build-pair', help='Build a (2,4N,N) Golay-ZCZ pair')
    p.add_argument('input', help='2-row pair, or 4-row pair followed by its mate')
    p.add_argument('--signs', required=True, help='x1,x2,x3,x4 with x1x2+x3x4 = 0')
    p.add_argument('output')
    p.set_defaults(handler=_cmd_build_pair)

    p = subparsers.add_parser('verify-gzcz', help='Verify a Golay-ZCZ set against a claimed width')
    p.add_argument('input')
    p.add_argument('--claimed-z', type=int, required=True)
    p.add_argument('--alphabet', choices=['binary', 'polyphase'], default=None,
                   help='Alphabet for the optimality factor (default: from the modulus)')
    p.set_defaults(handler=_cmd_verify_gzcz)

    p = subparsers.add_parser('build-set', help='Build a Golay-ZCZ set from a CCC')
    p.add_argument('input')
    p.add_argument('output')
    p.set_defaults(handler=_cmd_build_set)

    p = subparsers.add_parser('ccc-verify', help='Check a complete complementary code')
    p.add_argument('input')
    p.set_defaults(handler=_cmd_ccc_verify)

    p = subparsers.add_parser('ccc-transpose', help='Exchange set and row indices of a CCC')
    p.add_argument('input')
    p.add_argument('output')
    p.set_defaults(handler=_cmd_ccc_transpose)

    p = subparsers.add_parser('ccc-kron', help='Compose two CCCs with the same set size')
    p.add_argument('first')
    p.add_argument('second')
    p.add_argument('output')
    p.set_defaults(handler=_cmd_ccc_kron)

    p = subparsers.add_parser('seeds', help='List or export registry codes')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--list', action='store_true')
    group.add_argument('--get', metavar='NAME')
    p.add_argument('output', nargs='?')
    p.set_defaults(handler=_cmd_seeds)

    p = subparsers.add_parser('search-ccc', help='Search for binary (4,4,N) CCCs')
    p.add_argument('--M', type=int, default=4)
    p.add_argument('--N', type=int, required=True)
    p.add_argument('--timeout', type=float, default=60.0, help='Seconds (default: 60)')
    p.add_argument('--max', type=int, default=1, help='Maximum solutions (default: 1)')
    p.add_argument('--no-symmetry', action='store_true', help='Do not fix the first row')
    p.add_argument('--no-pruning', action='store_true', help='Check complete codes only')
    p.add_argument('--workers', type=int, default=1, help='Processes (capped by GZCZ_THREADS)')
    p.add_argument('output')
    p.set_defaults(handler=_cmd_search_ccc)

    p = subparsers.add_parser('report', help='Export a correlation profile as CSV')
    p.add_argument('input')
    p.add_argument('--mode', choices=['auto', 'cross'], default='auto')
    p.add_argument('--i', type=int, default=0)
    p.add_argument('--j', type=int, default=1)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument('--periodic', dest='periodic', action='store_true', default=True)
    kind.add_argument('--aperiodic', dest='periodic', action='store_false')
    p.add_argument('--csv', required=True)
    p.set_defaults(handler=_cmd_report)

    p = subparsers.add_parser('bound', help='Optimality factor of a sequence set')
    p.add_argument('input')
    p.add_argument('--alphabet', choices=['binary', 'polyphase'], default='polyphase')
    p.set_defaults(handler=_cmd_bound)

    p = subparsers.add_parser('lengths', help='Composable (4,4,N) lengths up to a bound')
    p.add_argument('--bound', type=int, required=True)
    p.set_defaults(handler=_cmd_lengths)

    return parser


def _log_to_file(path: Path, level: int) -> None:
    # module loggers do not propagate, so each one gets its own file handler
    names = [
        name for name, item in logging.Logger.manager.loggerDict.items()
        if name.startswith("golay_zcz") and isinstance(item, logging.Logger)
    ]
    for name in sorted(names):
        setup_file_logger(name, path, level)


def run_command(argv: Sequence[str]) -> Outcome:
    """Run one command and return (exit status, report lines)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as e:
        return USAGE, [f"error: {e}"]
    except SystemExit as e:
        # --help
        return (e.code if isinstance(e.code, int) else OK), []

    if not args.command:
        return USAGE, ["error: no command given", parser.format_usage().strip()]

    if args.verbose:
        set_level(logging.DEBUG)
    if args.log_file:
        _log_to_file(Path(args.log_file), logging.DEBUG if args.verbose else logging.INFO)

    try:
        return args.handler(args)
    except GolayZczError as e:
        logger.debug(f"{args.command} failed: {e!r}")
        return USAGE, [f"error: {e}"]
    except ValidationError as e:
        errors = "; ".join(f"{'.'.join(str(x) for x in err['loc'])}: {err['msg']}" for err in e.errors())
        return USAGE, [f"error: invalid search configuration: {errors}"]


def main(argv: Optional[Sequence[str]] = None) -> None:
    try:
        status, lines = run_command(sys.argv[1:] if argv is None else argv)
    except KeyboardInterrupt:
        logger.info("Operation cancelled by user")
        sys.exit(130)

    for line in lines:
        if line.startswith("error:"):
            print(line, file=sys.stderr)
        else:
            print(line)
    sys.exit(status)


if __name__ == "__main__":
    main()
