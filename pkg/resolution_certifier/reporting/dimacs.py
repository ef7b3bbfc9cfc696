"""DIMACS CNF reader and writer.

Accepted input: ``c`` comment lines, an optional ``p cnf <vars> <clauses>``
header, and zero-terminated clauses of signed integers that may span lines.
A ``%`` line (the SATLIB end marker) stops reading. Header counts are
advisory: a mismatch produces a warning, never an error.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from resolution_certifier.core.errors import DimacsFormatError
from resolution_certifier.logic.clauses import Clause, ClauseSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DimacsDocument:
    """A parsed DIMACS file.

    Attributes:
        clauses: The clause set (duplicates collapsed).
        declared_vars: Variable count from the header, if any.
        declared_clauses: Clause count from the header, if any.
        warnings: Advisory header mismatches.
    """

    clauses: ClauseSet
    declared_vars: int | None = None
    declared_clauses: int | None = None
    warnings: tuple[str, ...] = field(default_factory=tuple)


def read_dimacs(text: str) -> DimacsDocument:
    """Parse DIMACS text.

    Raises:
        DimacsFormatError: On a non-integer token, a malformed header, or a
            clause still open at the end of input.
    """
    declared_vars: int | None = None
    declared_clauses: int | None = None
    clauses: list[Clause] = []
    pending: list[int] = []
    pending_line = 0
    line_no = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsFormatError(f"invalid problem line '{line}'", line_no)
            try:
                declared_vars, declared_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsFormatError(f"invalid problem line '{line}'", line_no) from None
            continue
        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                raise DimacsFormatError(f"'{token}' is not an integer", line_no) from None
            if not pending:
                pending_line = line_no
            if value == 0:
                clauses.append(Clause.from_ints(pending))
                pending = []
            else:
                pending.append(value)
    if pending:
        raise DimacsFormatError("clause is not terminated by 0", pending_line or line_no)

    gamma = ClauseSet(clauses)
    warnings: list[str] = []
    if declared_clauses is not None and declared_clauses != len(clauses):
        warnings.append(f"header declares {declared_clauses} clauses, found {len(clauses)}")
    if declared_vars is not None and gamma.max_atom > declared_vars:
        warnings.append(f"header declares {declared_vars} variables, found atom {gamma.max_atom}")
    for warning in warnings:
        logger.warning(warning)
    return DimacsDocument(gamma, declared_vars, declared_clauses, tuple(warnings))


def parse_dimacs(text: str) -> ClauseSet:
    """Parse DIMACS text into a clause set; see ``read_dimacs``."""
    return read_dimacs(text).clauses


def format_dimacs(gamma: ClauseSet, comments: tuple[str, ...] = ()) -> str:
    """Write *gamma* as DIMACS text, one clause per line in set order."""
    lines = [f"c {comment}" for comment in comments]
    lines.append(f"p cnf {gamma.max_atom} {len(gamma)}")
    lines.extend(" ".join([*map(str, clause.to_ints()), "0"]) for clause in gamma)
    return "\n".join(lines) + "\n"
