"""Truth assignments: the witness returned for satisfiable clause sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from resolution_certifier.logic.clauses import Atom, ClauseSet, Literal


@dataclass(frozen=True)
class Assignment:
    """A mapping from atoms to truth values.

    Attributes:
        values: Atom id to boolean, held as a read-only view of a private
            copy. Assignments produced by the builder and the oracle are
            total over the atoms of the clause set they answer for.
    """

    values: Mapping[Atom, bool] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", MappingProxyType(dict(self.values)))

    def __hash__(self) -> int:
        return hash(frozenset(self.values.items()))

    @classmethod
    def from_literals(cls, literals: Iterable[Literal]) -> Assignment:
        """Make every given literal true."""
        return cls({lit.atom: lit.positive for lit in literals})

    def value(self, atom: Atom) -> bool | None:
        """Return the value of *atom*, or ``None`` when it is unassigned."""
        return self.values.get(atom)

    def makes_true(self, literal: Literal) -> bool:
        """``True`` when *literal* is assigned and true."""
        value = self.values.get(literal.atom)
        return value is not None and value == literal.positive

    def satisfies(self, gamma: ClauseSet) -> bool:
        """``True`` when every clause of *gamma* has a literal made true."""
        return all(any(self.makes_true(lit) for lit in clause) for clause in gamma)

    def extended_to(self, atoms: Iterable[Atom], default: bool = False) -> Assignment:
        """Return a copy that also assigns *default* to every missing atom in *atoms*."""
        merged = {atom: default for atom in atoms}
        merged.update(self.values)
        return Assignment(dict(sorted(merged.items())))

    def to_dimacs(self) -> str:
        """Return the model as signed integers, ascending by atom, ``0``-terminated."""
        lits = [str(atom if value else -atom) for atom, value in sorted(self.values.items())]
        return " ".join([*lits, "0"])

    def to_dict(self) -> dict[str, bool]:
        """Serialise to a JSON-safe dictionary keyed by atom id."""
        return {str(atom): value for atom, value in sorted(self.values.items())}
