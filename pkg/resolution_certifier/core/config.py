"""Solver configuration with sensible defaults for every limit and output option.

Every field can be overridden; the command-line interface maps its flags
onto these fields one-to-one.
"""

from __future__ import annotations

from dataclasses import dataclass

from resolution_certifier.builder.refutation_builder import ResourceBudget
from resolution_certifier.builder.strategies import (
    STRATEGY_NAMES,
    SelectionStrategy,
    strategy_from_name,
)
from resolution_certifier.oracle.truth_table import DEFAULT_MAX_ATOMS

EMIT_FORMATS = ("none", "dot", "trace", "structured")


@dataclass(frozen=False)
class SolverConfig:
    """Central configuration for solving, checking and emitting proofs.

    Attributes:
        strategy: Name of the clause/literal selection strategy.
        seed: Seed for the ``random`` strategy; ignored by the others.
        emit: Proof output format on UNSAT: none, dot, trace or structured.
        max_nodes: Largest DAG the builder may produce.
        max_depth: Deepest recursion the builder may reach.
        stats: Print builder counters as ``c`` comment lines.
        eager: Solve both halves of every split before combining them.
        oracle_max_atoms: Refuse oracle queries with more atoms than this.
        json_indent: Indentation of structured JSON output.
    """

    strategy: str = "first-fit"
    seed: int = 0
    emit: str = "none"
    max_nodes: int = 1_000_000
    max_depth: int = 10_000
    stats: bool = False
    eager: bool = False
    oracle_max_atoms: int = DEFAULT_MAX_ATOMS
    json_indent: int = 2

    def __post_init__(self) -> None:
        if self.strategy not in STRATEGY_NAMES:
            raise ValueError(
                f"unknown strategy '{self.strategy}', expected one of {', '.join(STRATEGY_NAMES)}"
            )
        if self.emit not in EMIT_FORMATS:
            raise ValueError(
                f"unknown emit format '{self.emit}', expected one of {', '.join(EMIT_FORMATS)}"
            )
        if self.max_nodes < 1 or self.max_depth < 1:
            raise ValueError(
                f"budget limits must be positive, got max_nodes={self.max_nodes}, "
                f"max_depth={self.max_depth}"
            )
        if self.oracle_max_atoms < 0:
            raise ValueError(f"oracle_max_atoms must be non-negative, got {self.oracle_max_atoms}")

    def budget(self) -> ResourceBudget:
        """Return the resource budget described by this configuration."""
        return ResourceBudget(max_nodes=self.max_nodes, max_depth=self.max_depth)

    def selection_strategy(self) -> SelectionStrategy:
        """Return a fresh instance of the configured selection strategy."""
        return strategy_from_name(self.strategy, self.seed)
