"""Literals, clauses, clause sets and the propositional resolution rule.

Atoms are positive integers numbered as in DIMACS. Clauses are canonical:
duplicate-free and sorted by atom id, with the negative literal of an atom
ordered before the positive one. Equal literal sets therefore compare and
hash equal, and every artifact derived from a clause is deterministic.

For display, atoms 1, 2 and 3 print as ``P``, ``Q`` and ``R``; higher atoms
print as ``P4``, ``P5``, ... Negation prints as ``~`` and the empty clause as
``[]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, TypeAlias

from resolution_certifier.core.errors import InvalidPivotError

Atom: TypeAlias = int

_ATOM_NAMES = {1: "P", 2: "Q", 3: "R"}


def atom_name(atom: Atom) -> str:
    """Return the display name of *atom* (``P``, ``Q``, ``R``, ``P4``, ...)."""
    return _ATOM_NAMES.get(atom, f"P{atom}")


@dataclass(frozen=True, order=True, slots=True)
class Literal:
    """An atom together with a polarity.

    Field order makes the dataclass ordering the canonical literal order:
    atom id ascending, ``False`` (negative) before ``True`` (positive).

    Attributes:
        atom: 1-based propositional letter.
        positive: ``True`` for ``P``, ``False`` for ``~P``.
    """

    atom: Atom
    positive: bool = True

    def __post_init__(self) -> None:
        if self.atom < 1:
            raise ValueError(f"atom ids start at 1, got {self.atom}")

    @classmethod
    def from_int(cls, value: int) -> Literal:
        """Build a literal from its DIMACS signed-integer form.

        Raises:
            ValueError: If *value* is 0.
        """
        if value == 0:
            raise ValueError("0 is not a literal")
        return cls(abs(value), value > 0)

    def to_int(self) -> int:
        """Return the DIMACS signed-integer form."""
        return self.atom if self.positive else -self.atom

    def __str__(self) -> str:
        name = atom_name(self.atom)
        return name if self.positive else f"~{name}"


def complement(literal: Literal) -> Literal:
    """Return the literal with the same atom and the opposite polarity."""
    return Literal(literal.atom, not literal.positive)


@dataclass(frozen=True, order=True, slots=True)
class Clause:
    """A finite set of literals read as their disjunction.

    The constructor canonicalises whatever sequence it is given, so
    ``Clause((q, p, p)) == Clause((p, q))``. The empty clause is the
    unsatisfiable clause ``[]``. Tautological clauses are representable.
    Ordering between clauses is lexicographic over the canonical literals.
    """

    literals: tuple[Literal, ...] = ()
    _members: frozenset[Literal] = field(
        init=False, repr=False, compare=False, hash=False, default=frozenset()
    )

    def __post_init__(self) -> None:
        members = frozenset(self.literals)
        object.__setattr__(self, "literals", tuple(sorted(members)))
        object.__setattr__(self, "_members", members)

    @classmethod
    def from_ints(cls, values: Iterable[int]) -> Clause:
        """Build a clause from DIMACS signed integers."""
        return cls(tuple(Literal.from_int(v) for v in values))

    @property
    def is_empty(self) -> bool:
        """``True`` for the empty clause."""
        return not self.literals

    @property
    def is_unit(self) -> bool:
        """``True`` when the clause is a single literal."""
        return len(self.literals) == 1

    def atoms(self) -> frozenset[Atom]:
        """Return the atoms occurring in the clause."""
        return frozenset(lit.atom for lit in self.literals)

    def has(self, atom: Atom, positive: bool) -> bool:
        """Membership test that tolerates out-of-range atoms (e.g. pivot 0)."""
        return any(lit.atom == atom and lit.positive == positive for lit in self.literals)

    def to_ints(self) -> list[int]:
        """Return the literals in DIMACS form, canonical order."""
        return [lit.to_int() for lit in self.literals]

    def union(self, *literals: Literal) -> Clause:
        """Return this clause with *literals* added."""
        return Clause(self.literals + literals)

    def without(self, literal: Literal) -> Clause:
        """Return this clause with *literal* removed (no-op when absent)."""
        return Clause(tuple(lit for lit in self.literals if lit != literal))

    def __contains__(self, literal: object) -> bool:
        return literal in self._members

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.literals)

    def __len__(self) -> int:
        return len(self.literals)

    def __str__(self) -> str:
        if not self.literals:
            return "[]"
        return "{" + ", ".join(str(lit) for lit in self.literals) + "}"


EMPTY_CLAUSE = Clause()


def make_clause(literals: Iterable[Literal]) -> Clause:
    """Return the canonical clause for *literals* (duplicates removed, sorted)."""
    return Clause(tuple(literals))


class ClauseSet:
    """A duplicate-free collection of clauses, read as their conjunction.

    Insertion order is kept: it is the order selection strategies scan and the
    order DIMACS output is written in. Equality and hashing ignore order, as
    befits a set; two sets built in different orders are equal but may lead
    order-sensitive strategies to different choices.
    """

    __slots__ = ("_clauses", "_index")

    def __init__(self, clauses: Iterable[Clause] = ()) -> None:
        ordered: dict[Clause, None] = dict.fromkeys(clauses)
        self._clauses: tuple[Clause, ...] = tuple(ordered)
        self._index: frozenset[Clause] = frozenset(ordered)

    @classmethod
    def from_ints(cls, clauses: Iterable[Iterable[int]]) -> ClauseSet:
        """Build a clause set from lists of DIMACS signed integers."""
        return cls(Clause.from_ints(c) for c in clauses)

    @property
    def clauses(self) -> tuple[Clause, ...]:
        """The member clauses in insertion order."""
        return self._clauses

    def atoms(self) -> list[Atom]:
        """Return the distinct atoms occurring in the set, ascending."""
        return sorted({lit.atom for clause in self._clauses for lit in clause})

    @property
    def var_count(self) -> int:
        """Number of distinct atoms appearing in the set."""
        return len(self.atoms())

    @property
    def max_atom(self) -> int:
        """Largest atom id appearing in the set, 0 when there is none."""
        return max((lit.atom for clause in self._clauses for lit in clause), default=0)

    def with_clause(self, clause: Clause) -> ClauseSet:
        """Return the set with *clause* appended (no-op if already present)."""
        if clause in self._index:
            return self
        return ClauseSet(self._clauses + (clause,))

    def without(self, clause: Clause) -> ClauseSet:
        """Return the set with *clause* removed."""
        return ClauseSet(c for c in self._clauses if c != clause)

    def complexity(self) -> int:
        """Sum of the member clause complexities."""
        return sum(complexity(c) for c in self._clauses)

    def __contains__(self, clause: object) -> bool:
        return clause in self._index

    def __iter__(self) -> Iterator[Clause]:
        return iter(self._clauses)

    def __len__(self) -> int:
        return len(self._clauses)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClauseSet):
            return NotImplemented
        return self._index == other._index

    def __hash__(self) -> int:
        return hash(self._index)

    def __repr__(self) -> str:
        return "ClauseSet(" + ", ".join(str(c) for c in self._clauses) + ")"


def complexity(item: Clause | ClauseSet) -> int:
    """Number of disjunction symbols: ``m - 1`` for an m-literal clause.

    Singletons and the empty clause have complexity 0; a clause set has the
    sum of its members' complexities.
    """
    if isinstance(item, ClauseSet):
        return item.complexity()
    return max(len(item.literals) - 1, 0)


def resolve(left: Clause, right: Clause, pivot: Atom) -> Clause:
    """Resolve *left* and *right* on *pivot*.

    *pivot* must occur positively in *left* and negatively in *right*. The
    result is ``(left - {pivot}) | (right - {~pivot})``; a pivot literal of the
    other polarity survives if its own side carries it.

    Raises:
        InvalidPivotError: If the orientation precondition fails.
    """
    if not left.has(pivot, True):
        raise InvalidPivotError(f"pivot {pivot} is not positive in {left}")
    if not right.has(pivot, False):
        raise InvalidPivotError(f"pivot {pivot} is not negative in {right}")
    kept = [lit for lit in left.literals if not (lit.atom == pivot and lit.positive)]
    kept.extend(lit for lit in right.literals if not (lit.atom == pivot and not lit.positive))
    return Clause(tuple(kept))


def is_tautology(clause: Clause) -> bool:
    """``True`` iff the clause contains some literal and its complement."""
    return any(complement(lit) in clause for lit in clause.literals if lit.positive)
