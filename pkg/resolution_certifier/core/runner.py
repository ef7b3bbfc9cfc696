"""Command runner: orchestrates parsing, solving, checking and emission.

The runner is the programmatic counterpart of the ``rescert`` command. Each
method takes input text, runs one pipeline and returns a ``CommandResult``
holding the exit code and the exact stdout text; the command-line layer only
reads files and prints. Exit codes follow the SAT-competition convention:

    ==  =========================================
    10  satisfiable
    20  unsatisfiable
    0   proof accepted / generation succeeded
    1   proof rejected
    2   usage, I/O or parse error
    3   resource budget exhausted
    ==  =========================================
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from resolution_certifier.builder.refutation_builder import (
    BuildResult,
    BuildStats,
    Model,
    RefutationBuilder,
)
from resolution_certifier.core.config import SolverConfig
from resolution_certifier.generators.instances import GenSpec, Pigeonhole, generate
from resolution_certifier.oracle.truth_table import Sat, truth_table_sat
from resolution_certifier.proof.checker import check_dag
from resolution_certifier.proof.dag import ResolutionDag
from resolution_certifier.reporting.dimacs import format_dimacs, parse_dimacs
from resolution_certifier.reporting.dot import to_dot
from resolution_certifier.reporting.json_serializer import ProofSerializer
from resolution_certifier.reporting.trace import parse_trace, to_trace

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_SAT = 10
EXIT_UNSAT = 20


@dataclass(frozen=True)
class CommandResult:
    """Exit code and stdout text of one command.

    Attributes:
        exit_code: Process exit status.
        output: Text for stdout, LF-terminated (empty when there is nothing to print).
    """

    exit_code: int
    output: str = ""


def stats_lines(stats: BuildStats) -> list[str]:
    """Render builder counters as DIMACS comment lines."""
    return [f"c {key}: {value}" for key, value in stats.to_dict().items()]


def _join(lines: list[str]) -> str:
    return "".join(line + "\n" for line in lines)


class CommandRunner:
    """Runs the solve, check, gen and oracle pipelines.

    Typical usage::

        runner = CommandRunner(SolverConfig(emit="trace"))
        result = runner.solve(Path("formula.cnf").read_text())
        print(result.output, end="")
        sys.exit(result.exit_code)

    """

    def __init__(self, config: SolverConfig | None = None) -> None:
        """Initialise the runner.

        Args:
            config: Optional configuration overrides.
        """
        self._config = config or SolverConfig()
        self._serializer = ProofSerializer(self._config)
        self._last_build: BuildResult | None = None

    @property
    def config(self) -> SolverConfig:
        """Return the active configuration."""
        return self._config

    @property
    def last_build(self) -> BuildResult | None:
        """Return the most recent build result, or ``None`` before the first solve."""
        return self._last_build

    def solve(self, cnf_text: str, proof_path: str | Path | None = None) -> CommandResult:
        """Decide a DIMACS formula and emit its certificate.

        On SAT the output is ``s SATISFIABLE`` and a ``v`` model line. On
        UNSAT it is ``s UNSATISFIABLE`` followed by the proof in the configured
        emit format, or the proof is written to *proof_path* instead.

        Raises:
            DimacsFormatError: If *cnf_text* is malformed.
            BudgetExhaustedError: If the node or depth budget runs out.
            OSError: If the proof file cannot be written.
        """
        gamma = parse_dimacs(cnf_text)
        builder = RefutationBuilder(
            self._config.selection_strategy(), self._config.budget(), self._config.eager
        )
        result = builder.build(gamma)
        self._last_build = result

        lines = stats_lines(result.stats) if self._config.stats else []
        if isinstance(result.outcome, Model):
            lines += ["s SATISFIABLE", f"v {result.outcome.assignment.to_dimacs()}"]
            return CommandResult(EXIT_SAT, _join(lines))

        lines.append("s UNSATISFIABLE")
        output = _join(lines)
        proof = self.emit_proof(result.outcome.dag, result.stats)
        if proof_path is not None and proof:
            path = self._serializer.write(proof, proof_path)
            logger.info("proof of %d nodes written to %s", len(result.outcome.dag), path)
        else:
            output += proof
        return CommandResult(EXIT_UNSAT, output)

    def emit_proof(self, dag: ResolutionDag, stats: BuildStats | None = None) -> str:
        """Render *dag* in the configured emit format (empty for ``none``)."""
        emit = self._config.emit
        if emit == "trace":
            return to_trace(dag)
        if emit == "dot":
            return to_dot(dag)
        if emit == "structured":
            return self._serializer.serialise(self._serializer.build_document(dag, stats))
        return ""

    def check(self, cnf_text: str, proof_text: str) -> CommandResult:
        """Verify a trace-format proof against a DIMACS formula.

        Exit 0 iff the DAG is sound over the formula and is a refutation;
        otherwise every violation is printed on its own line and the exit
        code is 1.

        Raises:
            DimacsFormatError: If *cnf_text* is malformed.
            TraceFormatError: If *proof_text* is malformed.
        """
        gamma = parse_dimacs(cnf_text)
        dag = parse_trace(proof_text)
        report = check_dag(dag, gamma)
        logger.info(
            "checked %d nodes: %d violation(s), refutation=%s",
            report.node_count,
            len(report.violations),
            report.is_refutation,
        )
        if report.accepted:
            return CommandResult(EXIT_OK, "s VERIFIED\n")
        lines = [str(v) for v in report.violations]
        if not report.is_refutation:
            lines.append("not a refutation: expected a single sink labeled with the empty clause")
        lines.append("s NOT VERIFIED")
        return CommandResult(EXIT_REJECTED, _join(lines))

    def generate(self, spec: GenSpec) -> CommandResult:
        """Write the DIMACS text of a generated instance.

        Raises:
            GeneratorParameterError: If the parameters are out of range.
        """
        gamma = generate(spec)
        if isinstance(spec, Pigeonhole):
            comment = f"pigeonhole holes={spec.holes}"
        else:
            comment = (
                f"random-ksat atoms={spec.atoms} clauses={spec.clauses} "
                f"k={spec.k} seed={spec.seed}"
            )
        return CommandResult(EXIT_OK, format_dimacs(gamma, (comment,)))

    def oracle(self, cnf_text: str) -> CommandResult:
        """Decide a DIMACS formula by truth-table enumeration.

        Raises:
            DimacsFormatError: If *cnf_text* is malformed.
            TooManyAtomsError: If the formula exceeds ``oracle_max_atoms``.
        """
        gamma = parse_dimacs(cnf_text)
        verdict = truth_table_sat(gamma, self._config.oracle_max_atoms)
        if isinstance(verdict, Sat):
            return CommandResult(
                EXIT_SAT, _join(["s SATISFIABLE", f"v {verdict.witness.to_dimacs()}"])
            )
        return CommandResult(EXIT_UNSAT, "s UNSATISFIABLE\n")
