"""Resolution Certifier - certifying propositional resolution with checkable refutation DAGs."""

__version__ = "1.0.0"
__author__ = "Resolution Certifier Team"

from resolution_certifier.builder.refutation_builder import (
    BuildResult,
    BuildStats,
    Model,
    RefutationBuilder,
    Refutation,
    ResourceBudget,
    build_resolution,
)
from resolution_certifier.builder.strategies import (
    FirstFit,
    MaxWidth,
    RandomChoice,
    Scripted,
    SelectionStrategy,
    select,
)
from resolution_certifier.builder.transforms import graft, percolate, percolate_with_mapping
from resolution_certifier.core.config import SolverConfig
from resolution_certifier.core.runner import CommandResult, CommandRunner
from resolution_certifier.logic.assignment import Assignment
from resolution_certifier.logic.clauses import (
    EMPTY_CLAUSE,
    Clause,
    ClauseSet,
    Literal,
    complexity,
    resolve,
)
from resolution_certifier.oracle.truth_table import Sat, Unsat, evaluate, truth_table_sat
from resolution_certifier.proof.checker import CheckReport, Violation, check_dag
from resolution_certifier.proof.dag import ResolutionDag
from resolution_certifier.reporting.dimacs import format_dimacs, parse_dimacs
from resolution_certifier.reporting.dot import to_dot
from resolution_certifier.reporting.trace import parse_trace, to_trace

__all__ = [
    "Assignment",
    "BuildResult",
    "BuildStats",
    "CheckReport",
    "Clause",
    "ClauseSet",
    "CommandResult",
    "CommandRunner",
    "EMPTY_CLAUSE",
    "FirstFit",
    "Literal",
    "MaxWidth",
    "Model",
    "RandomChoice",
    "Refutation",
    "RefutationBuilder",
    "ResolutionDag",
    "ResourceBudget",
    "Sat",
    "Scripted",
    "SelectionStrategy",
    "SolverConfig",
    "Unsat",
    "Violation",
    "build_resolution",
    "check_dag",
    "complexity",
    "evaluate",
    "format_dimacs",
    "graft",
    "parse_dimacs",
    "parse_trace",
    "percolate",
    "percolate_with_mapping",
    "resolve",
    "select",
    "to_dot",
    "to_trace",
    "truth_table_sat",
]
