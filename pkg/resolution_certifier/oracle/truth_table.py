"""Truth-table satisfiability oracle.

Ground truth for differential tests. It shares nothing with the builder
beyond the clause types and must stay obviously correct: it evaluates every
assignment in a fixed order and nothing else.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, TypeAlias

from resolution_certifier.core.errors import PartialAssignmentError, TooManyAtomsError
from resolution_certifier.logic.assignment import Assignment
from resolution_certifier.logic.clauses import ClauseSet

DEFAULT_MAX_ATOMS = 24


@dataclass(frozen=True)
class Unsat:
    """No assignment satisfies the clause set."""


@dataclass(frozen=True)
class Sat:
    """The first satisfying assignment in enumeration order.

    Attributes:
        witness: Total over the atoms of the queried clause set.
    """

    witness: Assignment


OracleVerdict: TypeAlias = Unsat | Sat


def evaluate(gamma: ClauseSet, assignment: Assignment) -> bool:
    """Evaluate *gamma* as a conjunction of disjunctions under *assignment*.

    The empty clause is false and the empty clause set is true.

    Raises:
        PartialAssignmentError: If an atom of *gamma* is unassigned.
    """
    values = assignment.values
    for atom in gamma.atoms():
        if atom not in values:
            raise PartialAssignmentError(f"atom {atom} has no value")
    return _holds(gamma, values)


def _holds(gamma: ClauseSet, values: Mapping[int, bool]) -> bool:
    for clause in gamma:
        satisfied = False
        for lit in clause:
            if values[lit.atom] == lit.positive:
                satisfied = True
                break
        if not satisfied:
            return False
    return True


def truth_table_sat(gamma: ClauseSet, max_atoms: int = DEFAULT_MAX_ATOMS) -> OracleVerdict:
    """Decide *gamma* by enumerating all assignments.

    Assignments are enumerated by binary counting with atoms in ascending
    order, the lowest atom as the most significant bit and false before true.

    Args:
        gamma: The clause set.
        max_atoms: Refuse inputs with more distinct atoms than this.

    Returns:
        ``Sat`` with the first satisfying assignment, or ``Unsat``.

    Raises:
        TooManyAtomsError: If *gamma* has more than *max_atoms* atoms.
    """
    atoms = gamma.atoms()
    if len(atoms) > max_atoms:
        raise TooManyAtomsError(f"{len(atoms)} atoms exceed the oracle limit of {max_atoms}")
    for bits in itertools.product((False, True), repeat=len(atoms)):
        values = dict(zip(atoms, bits))
        if _holds(gamma, values):
            return Sat(Assignment(values))
    return Unsat()
