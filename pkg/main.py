"""Command-line interface for the Frobenius character toolkit."""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from config import LOG_LEVEL, MAX_GROUND_SET, PARKING_ENUM_LIMIT, SELFTEST_MAX_N
from errors import FrobeniusError, InputFormatError, PreconditionError, ResourceGuardError
from export_reporter import ExportReporter, dumps
from parking import count_parking, generate_all, orbit_count_formula, orbit_count_pollak
from partitions import partitions_of
from setaction import (
    builtin_size,
    burnside_orbits,
    frobenius_m,
    frobenius_p,
    parking_action,
    resolve_builtin,
    young_orbits,
)
from selftest import SelfTester
from symfunc import Basis, convert
import logging

logger = logging.getLogger(__name__)
reporter = ExportReporter()


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors follow the one-line "error:" convention."""

    def error(self, message):
        sys.stderr.write(f"error: usage: {message}\n")
        sys.exit(2)


def _read_text(source: str) -> str:
    try:
        if source == "-":
            return sys.stdin.read()
        return Path(source).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise InputFormatError(f"cannot read {source}: not UTF-8 (byte {e.start}: {e.reason})")
    except OSError as e:
        raise InputFormatError(f"cannot read {source}: {e.strerror}")


def _guard_ground_set(size: int, limit: int):
    if size > limit:
        raise ResourceGuardError("max_ground_set", limit, size)


def load_action(builtin: Optional[str], path: Optional[str], max_ground_set: int):
    if builtin:
        _guard_ground_set(builtin_size(builtin), max_ground_set)
        return resolve_builtin(builtin)
    action = reporter.action_from_json(_read_text(path), name=path)
    _guard_ground_set(action.m, max_ground_set)
    return action.checked()


def run_character(args) -> int:
    """Print the Frobenius character of an action in the requested basis."""
    action = load_action(args.builtin, args.file, args.max_ground_set)
    basis = Basis.parse(args.basis)
    logger.info(f"character of {action.name} (n={action.n}, m={action.m}) by route {args.route}")

    if args.route == "fixedpoints":
        print(reporter.symfunc_to_json(convert(frobenius_p(action), basis)))
    elif args.route == "orbits":
        print(reporter.symfunc_to_json(convert(frobenius_m(action, args.workers), basis)))
    else:
        by_fixed_points = convert(frobenius_p(action), basis)
        by_orbits = convert(frobenius_m(action, args.workers), basis)
        equal = by_fixed_points.terms == by_orbits.terms
        print(dumps({
            "fixedpoints": reporter.symfunc_to_dict(by_fixed_points),
            "orbits": reporter.symfunc_to_dict(by_orbits),
            "equal": equal,
        }))
        if not equal:
            logger.error(f"{action.name}: fixed-point and orbit routes disagree")
            return 1
    return 0


def run_convert(args) -> int:
    """Convert a symmetric function read as JSON into another basis."""
    f = reporter.symfunc_from_json(_read_text(args.input))
    print(reporter.symfunc_to_json(convert(f, Basis.parse(args.basis))))
    return 0


def run_parking(args) -> int:
    """Parking function counts and orbit tables."""
    n = args.n
    if n < 1:
        raise PreconditionError(f"parking length must be positive, got {n}")

    if args.mode == "count":
        if n > PARKING_ENUM_LIMIT:
            raise ResourceGuardError("parking_enum_limit", PARKING_ENUM_LIMIT, n)
        expected = count_parking(n)
        enumerated = len(generate_all(n))
        print(dumps({
            "n": n,
            "count": str(expected),
            "enumerated": str(enumerated),
            "verdict": expected == enumerated,
        }))
        return 0 if expected == enumerated else 1

    if args.mode == "orbits":
        rows = [{"mu": list(mu), "orbits": str(orbit_count_formula(n, mu))} for mu in partitions_of(n)]
        print(dumps({"n": n, "orbits": rows}))
        return 0

    if n > PARKING_ENUM_LIMIT:
        raise ResourceGuardError("parking_enum_limit", PARKING_ENUM_LIMIT, n)
    _guard_ground_set(count_parking(n), args.max_ground_set)
    action = parking_action(n)
    rows = []
    for mu in partitions_of(n):
        formula = orbit_count_formula(n, mu)
        unionfind = young_orbits(action, mu)
        burnside = burnside_orbits(action, mu)
        multisets = orbit_count_pollak(n, mu)
        rows.append({
            "mu": list(mu),
            "formula": formula,
            "unionfind": unionfind,
            "burnside": burnside,
            "multisets": multisets,
            "verdict": formula == unionfind == burnside == multisets,
        })
    table = reporter.table(rows)
    records = reporter.table_records(table)
    passed = all(row["verdict"] for row in rows)
    print(dumps({"n": n, "rows": records, "verdict": passed}))
    return 0 if passed else 1


def run_selftest(args) -> int:
    """Run the invariant suites and print a pass/fail summary."""
    tester = SelfTester(args.max_n)
    summary = tester.run(args.suite)
    passed = bool(summary["passed"].all())
    sys.stderr.write(reporter.summary_text(summary, f"selftest max_n={args.max_n}") + "\n")
    print(dumps({"max_n": args.max_n, "passed": passed, "suites": reporter.table_records(summary)}))
    return 0 if passed else 1


def build_parser() -> CommandParser:
    parser = CommandParser(prog="frobenius", description="Frobenius characters of set representations of S_n")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress to standard error")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Character command
    char_parser = subparsers.add_parser("character", help="Frobenius character of an action")
    source = char_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--builtin", help="trivial:n, natural:n, subsets:n:k, parking:n or klein")
    source.add_argument("--file", help="Action JSON file ('-' for standard input)")
    char_parser.add_argument("--basis", default="m", choices=[b.value for b in Basis], help="Output basis")
    char_parser.add_argument(
        "--route",
        default="fixedpoints",
        choices=["fixedpoints", "orbits", "both"],
        help="Compute from fixed points, from Young subgroup orbits, or both",
    )
    char_parser.add_argument("--max-ground-set", type=int, default=MAX_GROUND_SET, help="Largest ground set accepted")
    char_parser.add_argument("--workers", type=int, default=1, help="Threads for per-mu orbit counts")

    # Convert command
    conv_parser = subparsers.add_parser("convert", help="Convert a symmetric function between bases")
    conv_parser.add_argument("--input", default="-", help="SymFunc JSON file ('-' for standard input)")
    conv_parser.add_argument("--basis", required=True, choices=[b.value for b in Basis], help="Target basis")

    # Parking command
    park_parser = subparsers.add_parser("parking", help="Parking function counts and orbit tables")
    park_parser.add_argument("--n", type=int, required=True, help="Length of the parking functions")
    park_parser.add_argument("--mode", default="count", choices=["count", "orbits", "verify"])
    park_parser.add_argument("--max-ground-set", type=int, default=MAX_GROUND_SET, help="Largest ground set accepted")

    # Selftest command
    test_parser = subparsers.add_parser("selftest", help="Run the invariant suites")
    test_parser.add_argument("--max-n", type=int, default=SELFTEST_MAX_N, help=f"Largest degree (1..{SELFTEST_MAX_N})")
    test_parser.add_argument("--suite", action="append", help="Run only this suite (repeatable)")

    return parser


COMMANDS = {
    "character": run_character,
    "convert": run_convert,
    "parking": run_parking,
    "selftest": run_selftest,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.INFO if args.verbose else getattr(logging, LOG_LEVEL, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    if not args.command:
        parser.print_help(sys.stderr)
        sys.stderr.write("error: usage: a command is required\n")
        return 2

    try:
        return COMMANDS[args.command](args)
    except FrobeniusError as e:
        message = " ".join(str(e).split())
        sys.stderr.write(f"error: {e.kind}: {message}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
