"""Exception hierarchy for the resolution certifier.

Every error raised by the package derives from ``ResolutionCertifierError``
and from the builtin a caller would naturally expect (``ValueError`` for bad
input, ``RuntimeError`` for exhausted resources), so either can be caught.
Checker findings are not errors: they are reported as ``Violation`` data.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from resolution_certifier.builder.refutation_builder import BuildStats


class ResolutionCertifierError(Exception):
    """Base class for all errors raised by the package."""


class InvalidPivotError(ResolutionCertifierError, ValueError):
    """The pivot is not positive in the left clause or not negative in the right."""


class UnknownNodeError(ResolutionCertifierError, ValueError):
    """A ``NodeId`` does not belong to the DAG it was used with."""


class NotALeafError(ResolutionCertifierError, ValueError):
    """An operation that needs a premise leaf was given an interior node."""


class NoMatchingPremiseError(ResolutionCertifierError, ValueError):
    """``graft`` found no leaf of the second DAG labeled with the first DAG's root."""


class NoNonliteralClauseError(ResolutionCertifierError, ValueError):
    """Clause selection was asked for on a set without a clause of width >= 2."""


class TooManyAtomsError(ResolutionCertifierError, ValueError):
    """The truth-table oracle refuses a clause set above its atom cap."""


class PartialAssignmentError(ResolutionCertifierError, ValueError):
    """An assignment does not cover every atom of the clause set being evaluated."""


class GeneratorParameterError(ResolutionCertifierError, ValueError):
    """An instance generator was given inconsistent parameters."""


class _LineError(ResolutionCertifierError, ValueError):
    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class DimacsFormatError(_LineError):
    """Malformed DIMACS CNF input; ``line`` is 1-based."""


class TraceFormatError(_LineError):
    """Malformed trace proof input; ``line`` is 1-based."""


class BudgetExhaustedError(ResolutionCertifierError, RuntimeError):
    """The builder exceeded its node or depth budget.

    Attributes:
        stats: Counters collected up to the point the budget ran out.
    """

    def __init__(self, message: str, stats: BuildStats) -> None:
        super().__init__(message)
        self.stats = stats


class MeasureViolationError(ResolutionCertifierError, RuntimeError):
    """A recursive call did not decrease the clause-set complexity."""
