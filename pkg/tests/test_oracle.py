"""Tests for the truth-table oracle."""

from __future__ import annotations

import random

import pytest

from resolution_certifier.core.errors import PartialAssignmentError, TooManyAtomsError
from resolution_certifier.generators.instances import RandomKSat, random_ksat
from resolution_certifier.logic.assignment import Assignment
from resolution_certifier.logic.clauses import ClauseSet
from resolution_certifier.oracle.truth_table import Sat, Unsat, evaluate, truth_table_sat
from tests.factories import cs, four_clauses


class TestEvaluate:
    def test_conjunction_of_disjunctions(self):
        gamma = cs([1, 2], [-1])
        assert evaluate(gamma, Assignment({1: False, 2: True}))
        assert not evaluate(gamma, Assignment({1: True, 2: True}))

    def test_empty_set_is_true(self):
        assert evaluate(ClauseSet(), Assignment({}))

    def test_empty_clause_is_false(self):
        assert not evaluate(cs([]), Assignment({}))

    def test_partial_assignment_raises(self):
        with pytest.raises(PartialAssignmentError):
            evaluate(cs([1, 2]), Assignment({1: True}))


class TestTruthTableSat:
    def test_four_clauses_are_unsat(self):
        assert truth_table_sat(four_clauses()) == Unsat()

    def test_first_witness_in_enumeration_order(self):
        # P is the most significant bit, false before true
        verdict = truth_table_sat(cs([1, 2]))
        assert isinstance(verdict, Sat)
        assert verdict.witness.to_dimacs() == "-1 2 0"

    def test_witness_covers_every_atom(self):
        verdict = truth_table_sat(cs([-1], [3, 5]))
        assert isinstance(verdict, Sat)
        assert sorted(verdict.witness.values) == [1, 3, 5]

    def test_empty_set(self):
        assert truth_table_sat(ClauseSet()) == Sat(Assignment({}))

    def test_empty_clause(self):
        assert truth_table_sat(cs([1], [])) == Unsat()

    def test_atom_limit(self):
        gamma = cs(list(range(1, 6)))
        with pytest.raises(TooManyAtomsError):
            truth_table_sat(gamma, max_atoms=4)
        assert isinstance(truth_table_sat(gamma, max_atoms=5), Sat)

    @pytest.mark.parametrize("seed", range(4))
    def test_dropping_clauses_never_loses_satisfiability(self, seed):
        rng = random.Random(seed)
        for index in range(15):
            gamma = random_ksat(RandomKSat(5, rng.randint(10, 30), 3, 100 * seed + index))
            subset = ClauseSet(rng.sample(gamma.clauses, rng.randint(0, len(gamma))))
            whole, part = truth_table_sat(gamma), truth_table_sat(subset)
            if isinstance(whole, Sat):
                assert isinstance(part, Sat)
                assert evaluate(subset, whole.witness)
            if isinstance(part, Unsat):
                assert isinstance(whole, Unsat)
