"""Clause and literal selection strategies for the splitting step.

The splitting step may pick any clause with at least two literals and any
literal in it; completeness does not depend on the choice. A strategy turns
that freedom into a deterministic policy: the same clause set and strategy
value always yield the same ``(clause, literal)`` pair.
"""

from __future__ import annotations

import hashlib
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import ClassVar, Mapping

from resolution_certifier.core.errors import NoNonliteralClauseError
from resolution_certifier.logic.clauses import Clause, ClauseSet, Literal

Choice = tuple[Clause, Literal]


def _nonliteral(gamma: ClauseSet) -> list[Clause]:
    candidates = [c for c in gamma if len(c) >= 2]
    if not candidates:
        raise NoNonliteralClauseError(f"no clause with two or more literals in {gamma!r}")
    return candidates


class SelectionStrategy(ABC):
    """Picks the clause to split and the literal to split it on."""

    name: ClassVar[str] = "abstract"

    @abstractmethod
    def select(self, gamma: ClauseSet) -> Choice:
        """Return a clause of *gamma* with two or more literals and a literal of it.

        Raises:
            NoNonliteralClauseError: If every clause of *gamma* has at most one literal.
        """


@dataclass(frozen=True)
class FirstFit(SelectionStrategy):
    """Lowest-indexed nonliteral clause, lowest canonical literal in it."""

    name: ClassVar[str] = "first-fit"

    def select(self, gamma: ClauseSet) -> Choice:
        clause = _nonliteral(gamma)[0]
        return clause, clause.literals[0]


@dataclass(frozen=True)
class MaxWidth(SelectionStrategy):
    """Widest clause, ties broken by canonical clause order; lowest canonical literal."""

    name: ClassVar[str] = "max-width"

    def select(self, gamma: ClauseSet) -> Choice:
        clause = min(_nonliteral(gamma), key=lambda c: (-len(c), c))
        return clause, clause.literals[0]


@dataclass(frozen=True)
class RandomChoice(SelectionStrategy):
    """Pseudo-random choice that depends only on the seed and the clause set.

    The generator is seeded from SHA-256 over the seed and the canonical
    DIMACS text of the sorted clause set, so the choice ignores the
    insertion order of the set and is the same on every platform.

    Attributes:
        seed: 64-bit unsigned seed.
    """

    seed: int = 0
    name: ClassVar[str] = "random"

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    def select(self, gamma: ClauseSet) -> Choice:
        candidates = sorted(_nonliteral(gamma))
        text = ";".join(" ".join(map(str, c.to_ints())) for c in sorted(gamma))
        digest = hashlib.sha256(f"{self.seed}|{text}".encode("ascii")).digest()
        rng = random.Random(int.from_bytes(digest[:8], "big"))
        clause = candidates[rng.randrange(len(candidates))]
        return clause, clause.literals[rng.randrange(len(clause))]


class Scripted(SelectionStrategy):
    """Pinned choices for given clause sets, a fallback strategy for the rest.

    Used to replay a specific derivation, e.g. a worked example drawn by hand.
    """

    name = "scripted"

    def __init__(
        self,
        choices: Mapping[ClauseSet, Choice],
        fallback: SelectionStrategy | None = None,
    ) -> None:
        """Initialise the strategy.

        Args:
            choices: Clause set to ``(clause, literal)``; sets compare as sets.
            fallback: Strategy for clause sets not in *choices*. Defaults to
                ``FirstFit``.

        Raises:
            ValueError: If a pinned clause is not a nonliteral member of its set
                or the literal is not in the clause.
        """
        for gamma, (clause, literal) in choices.items():
            if clause not in gamma or len(clause) < 2 or literal not in clause:
                raise ValueError(f"cannot pick ({clause}, {literal}) in {gamma!r}")
        self._choices = dict(choices)
        self._fallback = fallback or FirstFit()

    def select(self, gamma: ClauseSet) -> Choice:
        pinned = self._choices.get(gamma)
        if pinned is not None:
            return pinned
        return self._fallback.select(gamma)


def select(gamma: ClauseSet, strategy: SelectionStrategy) -> Choice:
    """Return the ``(clause, literal)`` pair *strategy* picks in *gamma*."""
    return strategy.select(gamma)


STRATEGY_NAMES = ("first-fit", "max-width", "random")


def strategy_from_name(name: str, seed: int = 0) -> SelectionStrategy:
    """Build a strategy from its command-line name.

    Raises:
        ValueError: If *name* is unknown.
    """
    if name == "first-fit":
        return FirstFit()
    if name == "max-width":
        return MaxWidth()
    if name == "random":
        return RandomChoice(seed)
    raise ValueError(f"unknown strategy '{name}' (expected one of {', '.join(STRATEGY_NAMES)})")
