"""Certifying decision procedure built on splitting, percolation and grafting.

For a clause set that is not yet all unit clauses, one clause ``C`` with at
least two literals is split on a literal ``L``: with ``A = C - {L}`` and
``Delta = gamma - {C}`` the builder solves ``Delta + {A}`` and, when needed,
``Delta + {L}``. Both have strictly smaller complexity than ``gamma``, which
bounds the recursion. A refutation of the first set is turned into one for
``gamma`` by percolating ``L`` into the premise ``A``; if that leaves the
unit ``{L}`` at the root, the refutation of the second set is grafted below
it. A model of either set satisfies ``gamma`` (``A`` and ``{L}`` are subsets
of ``C``), so satisfiable inputs come back with a model instead.

The recursion runs on an explicit stack of generator frames, so its depth is
limited by the configured budget rather than by the interpreter. Outcomes are
cached for the length of one build, keyed on the clause tuple in insertion
order: order-sensitive strategies such as first-fit may split the same set
differently when its clauses come in another order.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Generator, TypeAlias

from resolution_certifier.builder.strategies import FirstFit, SelectionStrategy
from resolution_certifier.builder.transforms import graft, percolate
from resolution_certifier.core.errors import BudgetExhaustedError, MeasureViolationError
from resolution_certifier.logic.assignment import Assignment
from resolution_certifier.logic.clauses import EMPTY_CLAUSE, Clause, ClauseSet
from resolution_certifier.proof.dag import ResolutionDag

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResourceBudget:
    """Limits on a single solve.

    Attributes:
        max_nodes: Largest DAG the builder may produce at any step.
        max_depth: Deepest recursion the builder may reach.
    """

    max_nodes: int = 1_000_000
    max_depth: int = 10_000

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.max_depth < 1:
            raise ValueError(
                f"budget limits must be positive, got max_nodes={self.max_nodes}, "
                f"max_depth={self.max_depth}"
            )


@dataclass
class BuildStats:
    """Counters collected during a solve.

    Attributes:
        recursive_calls: Number of clause sets solved, the input included.
            A clause set met again during the same build is answered from
            the cache and counted in ``cache_hits`` instead.
        dag_nodes: Size of the returned refutation (0 for a model).
        max_depth: Deepest recursion reached; the input is at depth 1.
        percolations: Number of ``percolate`` calls.
        grafts: Number of ``graft`` calls.
        shortcuts: Splits settled without grafting: the percolated root was
            already the empty clause, or a sub-refutation never used the
            premise that the split introduced.
        measure_checks: Complexity-decrease assertions evaluated.
        cache_hits: Sub-problems answered from the per-build cache.
    """

    recursive_calls: int = 0
    dag_nodes: int = 0
    max_depth: int = 0
    percolations: int = 0
    grafts: int = 0
    shortcuts: int = 0
    measure_checks: int = 0
    cache_hits: int = 0

    def to_dict(self) -> dict[str, int]:
        """Serialise to a JSON-safe dictionary."""
        return asdict(self)


@dataclass(frozen=True)
class Refutation:
    """Unsatisfiability certificate: a resolution refutation of the input."""

    dag: ResolutionDag

    @property
    def is_unsat(self) -> bool:
        return True


@dataclass(frozen=True)
class Model:
    """Satisfiability certificate: an assignment satisfying the input."""

    assignment: Assignment

    @property
    def is_unsat(self) -> bool:
        return False


SolveOutcome: TypeAlias = Refutation | Model


@dataclass(frozen=True)
class BuildResult:
    """An outcome together with the counters of the solve that produced it."""

    outcome: SolveOutcome
    stats: BuildStats = field(default_factory=BuildStats)

    def to_dict(self) -> dict[str, Any]:
        """Serialise the verdict and counters (not the DAG) to a dictionary."""
        result: dict[str, Any] = {
            "status": "UNSATISFIABLE" if self.outcome.is_unsat else "SATISFIABLE",
            "stats": self.stats.to_dict(),
        }
        if isinstance(self.outcome, Model):
            result["model"] = self.outcome.assignment.to_dict()
        return result


_Frame: TypeAlias = Generator[ClauseSet, SolveOutcome, SolveOutcome]
_CacheKey: TypeAlias = tuple[Clause, ...]


class RefutationBuilder:
    """Builds a refutation or a model for a clause set.

    Typical usage::

        builder = RefutationBuilder(MaxWidth(), ResourceBudget(max_nodes=50_000))
        result = builder.build(gamma)
        if isinstance(result.outcome, Refutation):
            print(to_trace(result.outcome.dag))

    """

    def __init__(
        self,
        strategy: SelectionStrategy | None = None,
        budget: ResourceBudget | None = None,
        eager: bool = False,
    ) -> None:
        """Initialise the builder.

        Args:
            strategy: Clause/literal selection policy. Defaults to ``FirstFit``.
            budget: Node and depth limits. Defaults to ``ResourceBudget()``.
            eager: Solve both halves of every split before combining them,
                instead of solving the second half only when it is needed.
                Outcomes are identical; only the counters differ.
        """
        self._strategy = strategy or FirstFit()
        self._budget = budget or ResourceBudget()
        self._eager = eager
        self._stats = BuildStats()

    @property
    def strategy(self) -> SelectionStrategy:
        """Return the selection strategy."""
        return self._strategy

    @property
    def budget(self) -> ResourceBudget:
        """Return the resource budget."""
        return self._budget

    def build(self, gamma: ClauseSet) -> BuildResult:
        """Decide *gamma* and return a checkable certificate.

        Returns:
            A ``Refutation`` whose DAG passes ``check_dag`` against *gamma*, or
            a ``Model`` total over the atoms of *gamma* (atoms left open default
            to false) that satisfies it.

        Raises:
            BudgetExhaustedError: If the node or depth budget runs out; the
                error carries the counters collected so far.
        """
        self._stats = BuildStats()
        outcome = self._run(gamma)
        if isinstance(outcome, Model):
            outcome = Model(outcome.assignment.extended_to(gamma.atoms()))
        else:
            self._stats.dag_nodes = len(outcome.dag)
        logger.info(
            "solved %d clauses over %d atoms: %s after %d calls",
            len(gamma),
            gamma.var_count,
            "UNSAT" if outcome.is_unsat else "SAT",
            self._stats.recursive_calls,
        )
        return BuildResult(outcome, self._stats)

    def _run(self, gamma: ClauseSet) -> SolveOutcome:
        cache: dict[_CacheKey, SolveOutcome] = {}
        stack: list[tuple[_CacheKey, _Frame]] = [(gamma.clauses, self._enter(gamma, 1))]
        reply: SolveOutcome | None = None
        while True:
            key, frame = stack[-1]
            try:
                child = frame.send(reply) if reply is not None else next(frame)
            except StopIteration as done:
                stack.pop()
                cache[key] = done.value
                if not stack:
                    return done.value
                reply = done.value
                continue
            reply = cache.get(child.clauses)
            if reply is not None:
                self._stats.cache_hits += 1
                continue
            stack.append((child.clauses, self._enter(child, len(stack) + 1)))

    def _enter(self, gamma: ClauseSet, depth: int) -> _Frame:
        if depth > self._budget.max_depth:
            raise BudgetExhaustedError(
                f"recursion depth {depth} exceeds the budget of {self._budget.max_depth}",
                self._stats,
            )
        self._stats.recursive_calls += 1
        self._stats.max_depth = max(self._stats.max_depth, depth)
        return self._solve(gamma, depth)

    def _charge(self, dag: ResolutionDag) -> ResolutionDag:
        if len(dag) > self._budget.max_nodes:
            raise BudgetExhaustedError(
                f"DAG of {len(dag)} nodes exceeds the budget of {self._budget.max_nodes}",
                self._stats,
            )
        return dag

    def _check_measure(self, parent: ClauseSet, child: ClauseSet) -> None:
        self._stats.measure_checks += 1
        if child.complexity() >= parent.complexity():
            raise MeasureViolationError(
                f"complexity did not decrease: {child.complexity()} >= {parent.complexity()}"
            )

    def _solve(self, gamma: ClauseSet, depth: int) -> _Frame:
        if EMPTY_CLAUSE in gamma:
            dag = ResolutionDag()
            dag.add_leaf(EMPTY_CLAUSE)
            return Refutation(dag)
        if all(len(c) <= 1 for c in gamma):
            return self._solve_units(gamma)

        clause, literal = self._strategy.select(gamma)
        rest = clause.without(literal)
        delta = gamma.without(clause)
        with_rest = delta.with_clause(rest)
        with_literal = delta.with_clause(Clause((literal,)))
        self._check_measure(gamma, with_rest)
        self._check_measure(gamma, with_literal)
        logger.debug(
            "depth %d: %d clauses, complexity %d, split %s on %s",
            depth,
            len(gamma),
            gamma.complexity(),
            clause,
            literal,
        )

        first = yield with_rest
        second = (yield with_literal) if self._eager else None

        if isinstance(first, Model):
            return first
        premise = first.dag.leaf_for(rest)
        if premise is None:
            self._stats.shortcuts += 1
            return first
        self._stats.percolations += 1
        lifted = self._charge(percolate(first.dag, premise, literal))
        root = lifted.root()
        assert root is not None
        if lifted.label(root).is_empty:
            self._stats.shortcuts += 1
            return Refutation(lifted)
        assert lifted.label(root) == Clause((literal,)), "percolated root must be {L}"

        if second is None:
            second = yield with_literal
        if isinstance(second, Model):
            return second
        if second.dag.leaf_for(Clause((literal,))) is None:
            self._stats.shortcuts += 1
            return second
        self._stats.grafts += 1
        return Refutation(self._charge(graft(lifted, second.dag)))

    def _solve_units(self, gamma: ClauseSet) -> Refutation | Model:
        units = [c.literals[0] for c in gamma]
        polarities: dict[int, set[bool]] = {}
        for lit in units:
            polarities.setdefault(lit.atom, set()).add(lit.positive)
        clashing = sorted(atom for atom, signs in polarities.items() if len(signs) == 2)
        if clashing:
            atom = clashing[0]
            dag = ResolutionDag()
            positive = dag.add_leaf(Clause.from_ints([atom]))
            negative = dag.add_leaf(Clause.from_ints([-atom]))
            dag.add_resolvent(positive, negative, atom)
            return Refutation(self._charge(dag))
        return Model(Assignment.from_literals(units))


def build_resolution(
    gamma: ClauseSet,
    strategy: SelectionStrategy | None = None,
    budget: ResourceBudget | None = None,
    eager: bool = False,
) -> BuildResult:
    """Decide *gamma*; see ``RefutationBuilder.build``."""
    return RefutationBuilder(strategy, budget, eager).build(gamma)
