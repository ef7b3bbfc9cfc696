"""Builders for clauses, clause sets and reference DAGs shared by the tests."""

from __future__ import annotations

import random

from resolution_certifier.builder.strategies import Scripted
from resolution_certifier.generators.instances import RandomKSat, random_ksat
from resolution_certifier.logic.clauses import Clause, ClauseSet, Literal
from resolution_certifier.proof.dag import ResolutionDag

P, Q = 1, 2


def cl(*values: int) -> Clause:
    """Clause from DIMACS integers: ``cl(1, -2)`` is ``{P, ~Q}``."""
    return Clause.from_ints(values)


def cs(*clauses: list[int]) -> ClauseSet:
    """Clause set from lists of DIMACS integers, in the given order."""
    return ClauseSet.from_ints(clauses)


def lit(value: int) -> Literal:
    return Literal.from_int(value)


def four_clauses() -> ClauseSet:
    """{{P,Q},{P,~Q},{~P,Q},{~P,~Q}}: every clause over P and Q, unsatisfiable."""
    return cs([1, 2], [1, -2], [-1, 2], [-1, -2])


def full_refutation() -> ResolutionDag:
    """The 8-node refutation of ``four_clauses()`` with one shared {P,Q} leaf."""
    dag = ResolutionDag()
    pq = dag.add_leaf(cl(1, 2))
    p_nq = dag.add_leaf(cl(1, -2))
    p = dag.add_resolvent(pq, p_nq, Q)
    np_q = dag.add_leaf(cl(-1, 2))
    q = dag.add_resolvent(pq, np_q, P)
    np_nq = dag.add_leaf(cl(-1, -2))
    np = dag.add_resolvent(q, np_nq, Q)
    dag.add_resolvent(p, np, P)
    return dag


def unit_q_refutation() -> ResolutionDag:
    """{P,Q} and {~P,Q} give {Q}; {Q} and {~Q} give the empty clause."""
    dag = ResolutionDag()
    q = dag.add_resolvent(dag.add_leaf(cl(1, 2)), dag.add_leaf(cl(-1, 2)), P)
    dag.add_resolvent(q, dag.add_leaf(cl(-2)), Q)
    return dag


def unit_p_refutation() -> ResolutionDag:
    """{P,Q} and {P,~Q} give {P}; {P} and {~P} give the empty clause."""
    dag = ResolutionDag()
    p = dag.add_resolvent(dag.add_leaf(cl(1, 2)), dag.add_leaf(cl(1, -2)), Q)
    dag.add_resolvent(p, dag.add_leaf(cl(-1)), P)
    return dag


def worked_example_strategy() -> Scripted:
    """Pinned choices that replay the hand-drawn construction for ``four_clauses()``.

    Every clause set not listed here falls back to first-fit.
    """
    return Scripted(
        {
            four_clauses(): (cl(-1, -2), lit(-1)),
            cs([1, 2], [1, -2], [-1, 2], [-2]): (cl(1, 2), lit(2)),
            cs([1, -2], [-1, 2], [-2], [1]): (cl(-1, 2), lit(2)),
        }
    )


def random_corpus(
    atoms: range, ratios: range, per_cell: int, base_seed: int = 0
) -> list[ClauseSet]:
    """Random 3-CNF instances, ``per_cell`` seeds for every (atoms, ratio) pair."""
    corpus = []
    for n in atoms:
        for ratio in ratios:
            for i in range(per_cell):
                seed = base_seed + 1000 * n + 100 * ratio + i
                corpus.append(random_ksat(RandomKSat(n, ratio * n, 3, seed)))
    return corpus


def small_corpus() -> list[ClauseSet]:
    """At most 20 clauses each; quick enough for the default run."""
    return random_corpus(range(3, 6), range(2, 5), 2)


def full_corpus() -> list[ClauseSet]:
    """1008 instances of 3 to 6 atoms at clause ratios 2 to 4, for ``-m slow``."""
    return random_corpus(range(3, 7), range(2, 5), 84)


def dense_corpus(per_cell: int = 3) -> list[ClauseSet]:
    """3 and 4 atoms at clause ratios 7 and 8; mostly unsatisfiable."""
    return random_corpus(range(3, 5), range(7, 9), per_cell)


def random_clause(rng: random.Random, atoms: list[int], width: int) -> Clause:
    """``width`` distinct atoms drawn from ``atoms``, each with a random sign."""
    return Clause(tuple(Literal(atom, rng.random() < 0.5) for atom in rng.sample(atoms, width)))
