"""Tests for literals, clauses, clause sets and the resolution rule."""

from __future__ import annotations

import itertools
import random

import pytest

from resolution_certifier.core.errors import InvalidPivotError
from resolution_certifier.logic.assignment import Assignment
from resolution_certifier.logic.clauses import (
    EMPTY_CLAUSE,
    Clause,
    ClauseSet,
    Literal,
    atom_name,
    complement,
    complexity,
    is_tautology,
    make_clause,
    resolve,
)
from tests.factories import cl, cs, four_clauses, lit, random_clause

ATOMS = [1, 2, 3, 4, 5, 6]


def _clashing_pair(rng: random.Random) -> tuple[Clause, Clause, int]:
    """Two clauses with *pivot* positive in the first and negative in the second only."""
    pivot = rng.choice(ATOMS)
    others = [atom for atom in ATOMS if atom != pivot]
    left = random_clause(rng, others, rng.randint(0, 3)).union(Literal(pivot, True))
    right = random_clause(rng, others, rng.randint(0, 3)).union(Literal(pivot, False))
    return left, right, pivot


class TestLiteral:
    def test_from_int_keeps_sign(self):
        assert Literal.from_int(-3) == Literal(3, False)
        assert Literal.from_int(2).to_int() == 2

    def test_zero_is_rejected(self):
        with pytest.raises(ValueError):
            Literal.from_int(0)
        with pytest.raises(ValueError):
            Literal(0)

    def test_display_names(self):
        assert str(lit(1)) == "P"
        assert str(lit(-2)) == "~Q"
        assert str(lit(3)) == "R"
        assert atom_name(7) == "P7"

    def test_negative_orders_before_positive(self):
        assert lit(-1) < lit(1) < lit(-2)

    def test_complement(self):
        assert complement(lit(4)) == lit(-4)


class TestClause:
    def test_duplicates_are_removed(self):
        assert cl(1, 1) == cl(1)
        assert len(cl(2, 1, 2)) == 2

    def test_canonical_order(self):
        assert cl(2, -1).to_ints() == [-1, 2]
        assert cl(1, -1).to_ints() == [-1, 1]
        assert make_clause([lit(2), lit(1)]) == cl(1, 2)

    def test_equal_clauses_hash_equal(self):
        assert hash(cl(2, 1)) == hash(cl(1, 2))

    def test_membership(self):
        clause = cl(1, -2)
        assert lit(-2) in clause
        assert lit(2) not in clause
        assert clause.has(1, True)
        assert not clause.has(0, True)

    def test_display(self):
        assert str(cl(1, -2)) == "{P, ~Q}"
        assert str(EMPTY_CLAUSE) == "[]"

    def test_empty_and_unit(self):
        assert Clause().is_empty
        assert cl(3).is_unit
        assert not cl(1, 2).is_unit

    def test_union_and_without(self):
        assert cl(-2).union(lit(-1)) == cl(-1, -2)
        assert cl(-1, -2).without(lit(-1)) == cl(-2)
        assert cl(1).without(lit(2)) == cl(1)

    def test_tautology_is_representable(self):
        assert is_tautology(cl(1, -1, 2))
        assert not is_tautology(cl(1, 2))

    @pytest.mark.parametrize("seed", range(5))
    def test_make_clause_is_idempotent(self, seed):
        rng = random.Random(seed)
        for _ in range(50):
            literals = [Literal(rng.randint(1, 6), rng.random() < 0.5) for _ in range(6)]
            once = make_clause(literals)
            assert make_clause(once.literals) == once
            assert make_clause(once.literals).literals == once.literals
            rng.shuffle(literals)
            assert make_clause(literals + literals[:2]) == once


class TestComplexity:
    def test_clause(self):
        assert complexity(EMPTY_CLAUSE) == 0
        assert complexity(cl(1)) == 0
        assert complexity(cl(1, 2, 3)) == 2

    def test_clause_set_sums_members(self):
        assert complexity(four_clauses()) == 4
        assert four_clauses().complexity() == 4
        assert complexity(cs([1], [-1])) == 0

    @pytest.mark.parametrize("seed", range(5))
    def test_adding_a_literal_adds_one(self, seed):
        rng = random.Random(seed)
        for _ in range(50):
            clause = random_clause(rng, ATOMS, rng.randint(1, 4))
            fresh = Literal(rng.randint(1, 7), rng.random() < 0.5)
            if fresh in clause:
                continue
            assert complexity(clause.union(fresh)) == complexity(clause) + 1

    @pytest.mark.parametrize("seed", range(5))
    def test_resolvent_is_no_more_complex_than_its_parents(self, seed):
        rng = random.Random(seed)
        for _ in range(50):
            left, right, pivot = _clashing_pair(rng)
            resolvent = resolve(left, right, pivot)
            assert complexity(resolvent) <= complexity(left) + complexity(right)


class TestResolve:
    def test_cancels_pivot(self):
        assert resolve(cl(1, 2), cl(-1, 2), 1) == cl(2)

    def test_unit_clash_gives_empty_clause(self):
        assert resolve(cl(2), cl(-2), 2).is_empty

    def test_tautological_resolvent_is_kept(self):
        assert resolve(cl(1, -2), cl(-1, 2), 1) == cl(-2, 2)

    def test_other_polarity_of_pivot_survives(self):
        assert resolve(cl(-1, 1), cl(-1), 1) == cl(-1)

    def test_wrong_orientation_raises(self):
        with pytest.raises(InvalidPivotError):
            resolve(cl(1, 2), cl(1, -2), 1)
        with pytest.raises(InvalidPivotError, match="not negative"):
            resolve(cl(1), cl(2), 1)

    def test_invalid_pivot_is_a_value_error(self):
        with pytest.raises(ValueError):
            resolve(cl(-1), cl(1), 1)

    @pytest.mark.parametrize("seed", range(5))
    def test_models_of_both_parents_satisfy_the_resolvent(self, seed):
        rng = random.Random(seed)
        for _ in range(20):
            left, right, pivot = _clashing_pair(rng)
            resolvent = ClauseSet([resolve(left, right, pivot)])
            for bits in itertools.product((False, True), repeat=len(ATOMS)):
                assignment = Assignment(dict(zip(ATOMS, bits)))
                if assignment.satisfies(ClauseSet([left, right])):
                    assert assignment.satisfies(resolvent)

    @pytest.mark.parametrize("seed", range(5))
    def test_swapping_sides_with_the_pivot_renamed(self, seed):
        rng = random.Random(seed)
        for _ in range(50):
            left, right, pivot = _clashing_pair(rng)

            def rename(clause: Clause) -> Clause:
                return Clause(tuple(complement(x) if x.atom == pivot else x for x in clause))

            assert resolve(rename(right), rename(left), pivot) == resolve(left, right, pivot)


class TestClauseSet:
    def test_duplicate_clauses_collapse(self):
        gamma = cs([1, 2], [2, 1], [1, 1, 2])
        assert len(gamma) == 1

    def test_equality_ignores_order(self):
        assert cs([1], [-2]) == cs([-2], [1])
        assert hash(cs([1], [-2])) == hash(cs([-2], [1]))

    def test_insertion_order_is_kept(self):
        assert [c.to_ints() for c in cs([2], [1], [-1])] == [[2], [1], [-1]]

    def test_with_clause_appends(self):
        gamma = cs([1, 2])
        extended = gamma.with_clause(cl(-1))
        assert list(extended) == [cl(1, 2), cl(-1)]
        assert gamma.with_clause(cl(2, 1)) is gamma

    def test_without(self):
        assert four_clauses().without(cl(-1, -2)) == cs([1, 2], [1, -2], [-1, 2])

    def test_atoms(self):
        gamma = cs([3, -1], [5])
        assert gamma.atoms() == [1, 3, 5]
        assert gamma.var_count == 3
        assert gamma.max_atom == 5

    def test_empty_set(self):
        gamma = ClauseSet()
        assert len(gamma) == 0
        assert gamma.max_atom == 0
        assert gamma.atoms() == []

    def test_contains_empty_clause(self):
        assert EMPTY_CLAUSE in cs([1], [])
