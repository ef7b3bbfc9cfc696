"""Deterministic CNF instance families.

Every generator is a pure function of its parameters. Random instances use a
pinned 64-bit linear congruential generator so that corpora are reproducible
across implementations:

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2**64

with the state initialised to the seed and each output taken as the new
state's upper 32 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TypeAlias

from resolution_certifier.core.errors import GeneratorParameterError
from resolution_certifier.logic.clauses import Clause, ClauseSet, Literal

_LCG_MULTIPLIER = 6364136223846793005
_LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg64:
    """The pinned 64-bit linear congruential generator."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u32(self) -> int:
        """Advance and return the upper 32 bits of the new state."""
        self._state = (_LCG_MULTIPLIER * self._state + _LCG_INCREMENT) & _MASK64
        return self._state >> 32

    def below(self, bound: int) -> int:
        """Return a value in ``[0, bound)`` (``next_u32() % bound``)."""
        return self.next_u32() % bound

    def bit(self) -> bool:
        """Return a fair bit (the top bit of ``next_u32()``)."""
        return bool(self.next_u32() >> 31)


@dataclass(frozen=True)
class Pigeonhole:
    """``holes + 1`` pigeons into ``holes`` holes.

    Attributes:
        holes: Number of holes, at least 1.
    """

    holes: int


@dataclass(frozen=True)
class RandomKSat:
    """Uniform random k-CNF.

    Attributes:
        atoms: Number of atoms to draw from.
        clauses: Number of clauses to draw.
        k: Distinct atoms per clause.
        seed: 64-bit unsigned generator seed.
    """

    atoms: int
    clauses: int
    k: int
    seed: int = 0


GenSpec: TypeAlias = Pigeonhole | RandomKSat


def pigeonhole_atom(pigeon: int, hole: int, holes: int) -> int:
    """Atom stating that *pigeon* sits in *hole* (both 1-based)."""
    return (pigeon - 1) * holes + hole


def pigeonhole(holes: int) -> ClauseSet:
    """The pigeonhole principle for ``holes + 1`` pigeons, which is unsatisfiable.

    Clauses: one positive clause per pigeon (it sits in some hole), then for
    each hole and each pair of pigeons ``i < i'`` the clause
    ``{~p(i, j), ~p(i', j)}``.

    Raises:
        GeneratorParameterError: If *holes* < 1.
    """
    if holes < 1:
        raise GeneratorParameterError(f"pigeonhole needs at least one hole, got {holes}")
    pigeons = holes + 1
    clauses = [
        Clause.from_ints(pigeonhole_atom(i, j, holes) for j in range(1, holes + 1))
        for i in range(1, pigeons + 1)
    ]
    for j in range(1, holes + 1):
        for i in range(1, pigeons + 1):
            for other in range(i + 1, pigeons + 1):
                clauses.append(
                    Clause.from_ints(
                        [-pigeonhole_atom(i, j, holes), -pigeonhole_atom(other, j, holes)]
                    )
                )
    return ClauseSet(clauses)


def random_ksat(spec: RandomKSat) -> ClauseSet:
    """Draw ``spec.clauses`` clauses of ``spec.k`` distinct atoms each.

    Atoms are sampled without replacement by a partial Fisher-Yates shuffle
    of ``1..atoms``; each polarity is one fair bit. Repeated draws collapse in
    the clause set.

    Raises:
        GeneratorParameterError: If ``k`` exceeds ``atoms`` or a count is negative.
    """
    if spec.k > spec.atoms:
        raise GeneratorParameterError(f"k={spec.k} exceeds the number of atoms {spec.atoms}")
    if min(spec.atoms, spec.clauses, spec.k) < 0:
        raise GeneratorParameterError(f"counts must be non-negative in {spec}")
    rng = Lcg64(spec.seed)
    drawn = []
    for _ in range(spec.clauses):
        pool = list(range(1, spec.atoms + 1))
        for i in range(spec.k):
            j = i + rng.below(spec.atoms - i)
            pool[i], pool[j] = pool[j], pool[i]
        drawn.append(Clause(tuple(Literal(atom, rng.bit()) for atom in pool[: spec.k])))
    return ClauseSet(drawn)


def generate(spec: GenSpec) -> ClauseSet:
    """Dispatch on the generator spec."""
    if isinstance(spec, Pigeonhole):
        return pigeonhole(spec.holes)
    return random_ksat(spec)
