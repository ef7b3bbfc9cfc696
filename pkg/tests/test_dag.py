"""Tests for the resolution DAG arena."""

from __future__ import annotations

import pytest

from resolution_certifier.core.errors import InvalidPivotError, UnknownNodeError
from resolution_certifier.logic.clauses import EMPTY_CLAUSE
from resolution_certifier.proof.dag import DagNode, Leaf, ResolutionDag, Resolvent
from tests.factories import P, Q, cl


class TestAddLeaf:
    def test_equal_premises_share_a_leaf(self):
        dag = ResolutionDag()
        first = dag.add_leaf(cl(1, 2))
        second = dag.add_leaf(cl(2, 1))
        assert first == second
        assert len(dag) == 1

    def test_distinct_premises_get_distinct_ids(self):
        dag = ResolutionDag()
        assert dag.add_leaf(cl(1, 2)) != dag.add_leaf(cl(1, -2))

    def test_empty_clause_leaf_is_a_refutation(self):
        dag = ResolutionDag()
        dag.add_leaf(EMPTY_CLAUSE)
        assert dag.is_refutation()

    def test_leaf_for(self):
        dag = ResolutionDag()
        node = dag.add_leaf(cl(-2))
        assert dag.leaf_for(cl(-2)) == node
        assert dag.leaf_for(cl(2)) is None


class TestAddResolvent:
    def test_label_is_the_resolvent(self):
        dag = ResolutionDag()
        node = dag.add_resolvent(dag.add_leaf(cl(1, 2)), dag.add_leaf(cl(-1, 2)), P)
        assert dag.label(node) == cl(2)
        assert dag.node(node).kind == Resolvent(0, 1, P)

    def test_unit_clash(self):
        dag = ResolutionDag()
        node = dag.add_resolvent(dag.add_leaf(cl(2)), dag.add_leaf(cl(-2)), Q)
        assert dag.label(node).is_empty

    def test_wrong_orientation_raises(self):
        dag = ResolutionDag()
        left, right = dag.add_leaf(cl(1, 2)), dag.add_leaf(cl(1, -2))
        with pytest.raises(InvalidPivotError):
            dag.add_resolvent(left, right, P)
        assert len(dag) == 2

    def test_unknown_parent_raises(self):
        dag = ResolutionDag()
        leaf = dag.add_leaf(cl(1))
        with pytest.raises(UnknownNodeError):
            dag.add_resolvent(leaf, 5, P)

    def test_parents_leave_the_sink_set(self):
        dag = ResolutionDag()
        left, right = dag.add_leaf(cl(1)), dag.add_leaf(cl(-1))
        assert dag.sinks() == (left, right)
        assert dag.root() is None
        node = dag.add_resolvent(left, right, P)
        assert dag.sinks() == (node,)
        assert dag.root() == node

    def test_interior_nodes_are_not_merged(self):
        dag = ResolutionDag()
        left, right = dag.add_leaf(cl(1)), dag.add_leaf(cl(-1))
        assert dag.add_resolvent(left, right, P) != dag.add_resolvent(left, right, P)


class TestStructure:
    def test_reference_refutation_shape(self, refutation):
        assert len(refutation) == 8
        assert len(refutation.leaves()) == 4
        assert refutation.is_refutation()

    def test_parents_precede_children(self, refutation):
        for node in refutation:
            assert all(parent < node.id for parent in node.parents)

    def test_descendants_of_shared_leaf(self, refutation):
        # {P,Q} feeds both {P} and {Q}
        assert refutation.descendants_of(0) == frozenset({2, 4, 6, 7})

    def test_descendants_of_premise_used_last(self, small_refutation):
        leaf = small_refutation.leaf_for(cl(-2))
        assert small_refutation.descendants_of(leaf) == frozenset({4})

    def test_sink_has_no_descendants(self, refutation):
        assert refutation.descendants_of(7) == frozenset()

    def test_descendants_of_unknown_node(self, refutation):
        with pytest.raises(UnknownNodeError):
            refutation.descendants_of(99)

    def test_premises_in_arena_order(self, refutation):
        assert refutation.premises() == (cl(1, 2), cl(1, -2), cl(-1, 2), cl(-1, -2))

    def test_children(self, small_refutation):
        assert small_refutation.children() == {0: [2], 1: [2], 2: [4], 3: [4], 4: []}

    def test_render(self, small_refutation):
        assert small_refutation.render().splitlines() == [
            "n1 {P, Q}",
            "n2 {~P, Q}",
            "n3 {Q} <- n1 n2 on P",
            "n4 {~Q}",
            "n5 [] <- n3 n4 on Q",
        ]


class TestIsRefutation:
    def test_empty_dag(self):
        assert not ResolutionDag().is_refutation()

    def test_unit_root(self):
        dag = ResolutionDag()
        q = dag.add_resolvent(dag.add_leaf(cl(1, 2)), dag.add_leaf(cl(-1, 2)), P)
        dag.add_resolvent(q, dag.add_leaf(cl(-1, -2)), Q)
        assert dag.label(dag.root()) == cl(-1)
        assert not dag.is_refutation()

    def test_two_sinks(self):
        dag = ResolutionDag()
        dag.add_leaf(EMPTY_CLAUSE)
        dag.add_leaf(cl(1))
        assert not dag.is_refutation()


class TestFromNodes:
    def test_loads_nodes_verbatim(self):
        nodes = [
            DagNode(0, cl(1), Leaf()),
            DagNode(1, cl(-1), Leaf()),
            DagNode(2, cl(2), Resolvent(0, 1, P)),
        ]
        dag = ResolutionDag.from_nodes(nodes)
        assert dag.nodes == tuple(nodes)
        assert dag.sinks() == (2,)
        assert dag.leaf_for(cl(-1)) == 1
        assert not dag.is_refutation()

    def test_out_of_range_parents_are_kept(self):
        dag = ResolutionDag.from_nodes([DagNode(0, EMPTY_CLAUSE, Resolvent(4, 5, P))])
        assert dag.node(0).parents == (4, 5)
        assert dag.is_refutation()
