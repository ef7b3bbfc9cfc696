"""Resolution DAGs: premise leaves and binary resolvent nodes in one arena.

Nodes are appended to a dense arena, so a ``NodeId`` is an index and parents
always precede their children. Leaves are hash-consed: adding a premise that
is already a leaf returns the existing id. Interior nodes are never merged.
Each resolvent records its pivot and orientation (left parent carries the
positive pivot literal, right parent the negative one).

A DAG is built by a single writer and treated as immutable once handed out;
the transformations in ``builder.transforms`` always build new DAGs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, TypeAlias

from resolution_certifier.core.errors import UnknownNodeError
from resolution_certifier.logic.clauses import Atom, Clause, atom_name, resolve

NodeId: TypeAlias = int


@dataclass(frozen=True, slots=True)
class Leaf:
    """A premise node."""


@dataclass(frozen=True, slots=True)
class Resolvent:
    """An interior node produced by one resolution step.

    Attributes:
        left: Parent whose label contains the positive pivot literal.
        right: Parent whose label contains the negative pivot literal.
        pivot: The atom cancelled by the step.
    """

    left: NodeId
    right: NodeId
    pivot: Atom


NodeKind: TypeAlias = Leaf | Resolvent


@dataclass(frozen=True, slots=True)
class DagNode:
    """One node of a resolution DAG.

    Attributes:
        id: Index of the node in its DAG.
        clause: The label.
        kind: ``Leaf()`` or a ``Resolvent`` with its parents and pivot.
    """

    id: NodeId
    clause: Clause
    kind: NodeKind

    @property
    def is_leaf(self) -> bool:
        """``True`` for premise nodes."""
        return isinstance(self.kind, Leaf)

    @property
    def parents(self) -> tuple[NodeId, ...]:
        """``(left, right)`` for resolvents, ``()`` for leaves."""
        if isinstance(self.kind, Resolvent):
            return (self.kind.left, self.kind.right)
        return ()


class ResolutionDag:
    """Arena of resolution-DAG nodes with sink tracking and leaf hash-consing."""

    def __init__(self) -> None:
        self._nodes: list[DagNode] = []
        self._leaf_index: dict[Clause, NodeId] = {}
        self._sinks: dict[NodeId, None] = {}

    @classmethod
    def from_nodes(cls, nodes: Iterable[DagNode]) -> ResolutionDag:
        """Load nodes exactly as given, without validating anything.

        Used for proofs read from files and for corrupted proofs in tests:
        labels, pivots and parent pointers are taken on trust, and defects are
        for ``check_dag`` to report. Out-of-range parent ids are kept.
        """
        dag = cls()
        dag._nodes = list(nodes)
        consumed: set[NodeId] = set()
        for node in dag._nodes:
            consumed.update(node.parents)
            if node.is_leaf:
                dag._leaf_index.setdefault(node.clause, node.id)
        dag._sinks = {n.id: None for n in dag._nodes if n.id not in consumed}
        return dag

    def add_leaf(self, clause: Clause) -> NodeId:
        """Add a premise leaf labeled *clause* and return its id.

        If a leaf with an equal clause exists, its id is returned instead.
        """
        existing = self._leaf_index.get(clause)
        if existing is not None:
            return existing
        node_id = len(self._nodes)
        self._nodes.append(DagNode(node_id, clause, Leaf()))
        self._leaf_index[clause] = node_id
        self._sinks[node_id] = None
        return node_id

    def add_resolvent(self, left: NodeId, right: NodeId, pivot: Atom) -> NodeId:
        """Add the resolvent of *left* and *right* on *pivot*.

        Args:
            left: Parent carrying the positive pivot literal.
            right: Parent carrying the negative pivot literal.
            pivot: Atom to cancel.

        Returns:
            The id of the new node, which becomes a sink; both parents stop
            being sinks.

        Raises:
            UnknownNodeError: If a parent does not exist.
            InvalidPivotError: If the pivot orientation is wrong.
        """
        clause = resolve(self.label(left), self.label(right), pivot)
        node_id = len(self._nodes)
        self._nodes.append(DagNode(node_id, clause, Resolvent(left, right, pivot)))
        self._sinks.pop(left, None)
        self._sinks.pop(right, None)
        self._sinks[node_id] = None
        return node_id

    def node(self, node_id: NodeId) -> DagNode:
        """Return the node with id *node_id*.

        Raises:
            UnknownNodeError: If the id is out of range.
        """
        if not 0 <= node_id < len(self._nodes):
            raise UnknownNodeError(f"node {node_id} does not exist (DAG has {len(self._nodes)})")
        return self._nodes[node_id]

    def label(self, node_id: NodeId) -> Clause:
        """Return the clause labeling *node_id*."""
        return self.node(node_id).clause

    @property
    def nodes(self) -> tuple[DagNode, ...]:
        """All nodes in arena (topological) order."""
        return tuple(self._nodes)

    def sinks(self) -> tuple[NodeId, ...]:
        """Ids of the nodes with no outgoing edge, ascending."""
        return tuple(sorted(self._sinks))

    def root(self) -> NodeId | None:
        """The unique sink, or ``None`` when there are zero or several."""
        if len(self._sinks) != 1:
            return None
        return next(iter(self._sinks))

    def leaves(self) -> tuple[DagNode, ...]:
        """The premise leaves in arena order."""
        return tuple(n for n in self._nodes if n.is_leaf)

    def premises(self) -> tuple[Clause, ...]:
        """The distinct clauses labeling leaves, in arena order."""
        return tuple(dict.fromkeys(n.clause for n in self._nodes if n.is_leaf))

    def leaf_for(self, clause: Clause) -> NodeId | None:
        """Return the leaf labeled *clause*, or ``None``."""
        return self._leaf_index.get(clause)

    def children(self) -> dict[NodeId, list[NodeId]]:
        """Map each node id to the ids of the nodes it is a parent of."""
        edges: dict[NodeId, list[NodeId]] = {n.id: [] for n in self._nodes}
        for node in self._nodes:
            for parent in dict.fromkeys(node.parents):
                if parent in edges:
                    edges[parent].append(node.id)
        return edges

    def descendants_of(self, node_id: NodeId) -> frozenset[NodeId]:
        """All nodes reachable from *node_id* along parent-to-child edges.

        The node itself is excluded.

        Raises:
            UnknownNodeError: If the id is out of range.
        """
        self.node(node_id)
        edges = self.children()
        seen: set[NodeId] = set()
        queue = deque(edges[node_id])
        while queue:
            current = queue.popleft()
            if current in seen:
                continue
            seen.add(current)
            queue.extend(edges[current])
        return frozenset(seen)

    def is_refutation(self) -> bool:
        """``True`` iff there is exactly one sink and it is labeled with the empty clause."""
        root = self.root()
        if root is None:
            return False
        # ids of imported nodes are not trusted to match their position
        node = next((n for n in self._nodes if n.id == root), None)
        return node is not None and node.clause.is_empty

    def render(self) -> str:
        """Return a plain-text listing of the DAG, one node per line."""
        lines = []
        for node in self._nodes:
            line = f"n{node.id + 1} {node.clause}"
            if isinstance(node.kind, Resolvent):
                k = node.kind
                line += f" <- n{k.left + 1} n{k.right + 1} on {atom_name(k.pivot)}"
            lines.append(line)
        return "\n".join(lines)

    def __len__(self) -> int:
        return len(self._nodes)

    def __iter__(self) -> Iterator[DagNode]:
        return iter(self._nodes)

    def __repr__(self) -> str:
        return f"ResolutionDag(nodes={len(self._nodes)}, sinks={list(self.sinks())})"
