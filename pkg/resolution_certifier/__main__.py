"""Command-line interface for the resolution certifier.

Usage::

    rescert solve formula.cnf --emit trace --proof formula.proof
    rescert check formula.cnf formula.proof
    rescert gen pigeonhole --holes 3 > php3.cnf
    rescert oracle formula.cnf

Results go to stdout in DIMACS style (``s`` status, ``v`` model and ``c``
comment lines); diagnostics go to stderr. Exit codes are documented in
``resolution_certifier.core.runner``.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from resolution_certifier.builder.strategies import STRATEGY_NAMES
from resolution_certifier.core.config import EMIT_FORMATS, SolverConfig
from resolution_certifier.core.errors import BudgetExhaustedError, ResolutionCertifierError
from resolution_certifier.core.runner import (
    EXIT_BUDGET,
    EXIT_USAGE,
    CommandResult,
    CommandRunner,
    stats_lines,
)
from resolution_certifier.generators.instances import GenSpec, Pigeonhole, RandomKSat
from resolution_certifier.oracle.truth_table import DEFAULT_MAX_ATOMS

logger = logging.getLogger("resolution_certifier")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rescert",
        description="Certifying propositional resolution: refutations for UNSAT, models for SAT",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress to stderr (-v for INFO, -vv for DEBUG)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Decide a DIMACS formula and emit a certificate")
    solve.add_argument("input", nargs="?", default="-", help="DIMACS file (default: stdin)")
    solve.add_argument(
        "--strategy",
        choices=STRATEGY_NAMES,
        default="first-fit",
        help="Clause/literal selection strategy (default: first-fit)",
    )
    solve.add_argument(
        "--seed", type=int, default=0, help="Seed for the random strategy (default: 0)"
    )
    solve.add_argument(
        "--emit",
        choices=EMIT_FORMATS,
        default="none",
        help="Proof format printed on UNSAT (default: none)",
    )
    solve.add_argument(
        "--proof",
        default=None,
        help="Write the proof to this file instead of stdout (implies --emit trace "
        "unless another format is given)",
    )
    solve.add_argument(
        "--max-nodes", type=int, default=1_000_000, help="DAG size budget (default: 1000000)"
    )
    solve.add_argument(
        "--max-depth", type=int, default=10_000, help="Recursion depth budget (default: 10000)"
    )
    solve.add_argument(
        "--stats", action="store_true", help="Print builder counters as 'c' comment lines"
    )
    solve.add_argument(
        "--eager",
        action="store_true",
        help="Solve both halves of every split before combining them",
    )

    check = commands.add_parser("check", help="Verify a trace proof against a DIMACS formula")
    check.add_argument("cnf", help="DIMACS file")
    check.add_argument("proof", help="Trace proof file")

    gen = commands.add_parser("gen", help="Write a generated instance as DIMACS")
    gen.add_argument("-o", "--output", default=None, help="Output file (default: stdout)")
    families = gen.add_subparsers(dest="family", required=True)
    php = families.add_parser("pigeonhole", help="holes + 1 pigeons into holes holes")
    php.add_argument("--holes", type=int, required=True)
    ksat = families.add_parser("random-ksat", help="Uniform random k-CNF")
    ksat.add_argument("--atoms", type=int, required=True)
    ksat.add_argument("--clauses", type=int, required=True)
    ksat.add_argument("--k", type=int, default=3)
    ksat.add_argument("--seed", type=int, default=0)

    oracle = commands.add_parser("oracle", help="Decide a DIMACS formula by truth table")
    oracle.add_argument("input", nargs="?", default="-", help="DIMACS file (default: stdin)")
    oracle.add_argument(
        "--max-atoms",
        type=int,
        default=DEFAULT_MAX_ATOMS,
        help=f"Refuse formulas with more atoms (default: {DEFAULT_MAX_ATOMS})",
    )
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="c %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _config_from_args(args: argparse.Namespace) -> SolverConfig:
    if args.command == "solve":
        emit = args.emit
        if args.proof is not None and emit == "none":
            emit = "trace"
        return SolverConfig(
            strategy=args.strategy,
            seed=args.seed,
            emit=emit,
            max_nodes=args.max_nodes,
            max_depth=args.max_depth,
            stats=args.stats,
            eager=args.eager,
        )
    if args.command == "oracle":
        return SolverConfig(oracle_max_atoms=args.max_atoms)
    return SolverConfig()


def _gen_spec(args: argparse.Namespace) -> GenSpec:
    if args.family == "pigeonhole":
        return Pigeonhole(args.holes)
    return RandomKSat(atoms=args.atoms, clauses=args.clauses, k=args.k, seed=args.seed)


def _dispatch(runner: CommandRunner, args: argparse.Namespace) -> CommandResult:
    if args.command == "solve":
        return runner.solve(_read_input(args.input), proof_path=args.proof)
    if args.command == "check":
        return runner.check(_read_input(args.cnf), _read_input(args.proof))
    if args.command == "oracle":
        return runner.oracle(_read_input(args.input))
    result = runner.generate(_gen_spec(args))
    if args.output is not None:
        Path(args.output).write_text(result.output, encoding="ascii", newline="\n")
        return CommandResult(result.exit_code)
    return result


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point for the CLI.

    Args:
        argv: Arguments without the program name; ``None`` reads ``sys.argv``.

    Returns:
        The process exit code.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    _configure_logging(args.verbose)

    try:
        runner = CommandRunner(_config_from_args(args))
        result = _dispatch(runner, args)
    except BudgetExhaustedError as exc:
        lines = [f"c budget exhausted: {exc}", *stats_lines(exc.stats), "s UNKNOWN"]
        sys.stdout.write("".join(line + "\n" for line in lines))
        return EXIT_BUDGET
    except (ResolutionCertifierError, ValueError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE

    sys.stdout.write(result.output)
    sys.stdout.flush()
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
