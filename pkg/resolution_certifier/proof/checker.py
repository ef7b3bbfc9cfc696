"""Independent structural checker for resolution DAGs.

The checker re-verifies a DAG from its stored labels alone: it never trusts
how the DAG was built. Each rule is a pure function over the node list that
returns violations; the checker runs every rule and aggregates the findings
into a ``CheckReport``. A DAG is valid when the report holds no violations.

Resolvent labels are recomputed from the *stored* labels of the parents, so a
single corrupted label is reported at its own node and at every child whose
recomputation it breaks.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from resolution_certifier.logic.clauses import ClauseSet, resolve
from resolution_certifier.proof.dag import DagNode, ResolutionDag, Resolvent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    """A single defect found in a DAG.

    Attributes:
        rule_id: Machine-readable identifier of the rule that fired.
        node_id: The offending node (0-based arena index).
        description: Human-readable explanation.
    """

    rule_id: str
    node_id: int
    description: str

    def to_dict(self) -> dict[str, Any]:
        """Serialise to a JSON-safe dictionary.

        Returns:
            Plain dictionary.
        """
        return {
            "rule_id": self.rule_id,
            "node_id": self.node_id,
            "description": self.description,
        }

    def __str__(self) -> str:
        return f"{self.rule_id} at node {self.node_id + 1}: {self.description}"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of ``check_dag``.

    Attributes:
        violations: Every defect found, in node order per rule.
        is_refutation: Whether the DAG has a single sink labeled with the empty clause.
        node_count: Number of nodes inspected.
    """

    violations: tuple[Violation, ...] = field(default_factory=tuple)
    is_refutation: bool = False
    node_count: int = 0

    @property
    def ok(self) -> bool:
        """``True`` when no rule reported a violation."""
        return not self.violations

    @property
    def accepted(self) -> bool:
        """``True`` when the DAG is valid and is a refutation."""
        return self.ok and self.is_refutation

    def to_dict(self) -> dict[str, Any]:
        """Serialise to a JSON-safe dictionary."""
        return {
            "ok": self.ok,
            "is_refutation": self.is_refutation,
            "node_count": self.node_count,
            "violations": [v.to_dict() for v in self.violations],
        }


RuleFunction = Callable[[list[DagNode], ClauseSet | None], list[Violation]]


@dataclass(frozen=True)
class Rule:
    """A named structural rule.

    Attributes:
        rule_id: Unique identifier, also used as the violation ``rule_id``.
        description: What the rule checks.
        check: The rule function.
    """

    rule_id: str
    description: str
    check: RuleFunction


def _resolvent_parents_ok(node: DagNode, nodes: list[DagNode]) -> bool:
    if not isinstance(node.kind, Resolvent):
        return False
    return all(0 <= p < node.id and p < len(nodes) for p in node.parents)


def _rule_dense_ids(nodes: list[DagNode], gamma: ClauseSet | None) -> list[Violation]:
    return [
        Violation("dense_ids", index, f"node stored at position {index} claims id {node.id}")
        for index, node in enumerate(nodes)
        if node.id != index
    ]


def _rule_parent_exists(nodes: list[DagNode], gamma: ClauseSet | None) -> list[Violation]:
    violations = []
    for node in nodes:
        for parent in node.parents:
            if not 0 <= parent < len(nodes):
                violations.append(
                    Violation("parent_exists", node.id, f"parent {parent + 1} does not exist")
                )
    return violations


def _rule_topological_order(nodes: list[DagNode], gamma: ClauseSet | None) -> list[Violation]:
    violations = []
    for node in nodes:
        for parent in node.parents:
            if 0 <= parent < len(nodes) and parent >= node.id:
                violations.append(
                    Violation(
                        "topological_order",
                        node.id,
                        f"parent {parent + 1} does not precede node {node.id + 1}",
                    )
                )
    return violations


def _rule_pivot_orientation(nodes: list[DagNode], gamma: ClauseSet | None) -> list[Violation]:
    violations = []
    for node in nodes:
        if not _resolvent_parents_ok(node, nodes):
            continue
        assert isinstance(node.kind, Resolvent)
        kind = node.kind
        left, right = nodes[kind.left].clause, nodes[kind.right].clause
        if not left.has(kind.pivot, True) or not right.has(kind.pivot, False):
            violations.append(
                Violation(
                    "pivot_orientation",
                    node.id,
                    f"pivot {kind.pivot} needs to be positive in {left} "
                    f"and negative in {right}",
                )
            )
    return violations


def _rule_resolvent_label(nodes: list[DagNode], gamma: ClauseSet | None) -> list[Violation]:
    violations = []
    for node in nodes:
        if not _resolvent_parents_ok(node, nodes):
            continue
        assert isinstance(node.kind, Resolvent)
        kind = node.kind
        left, right = nodes[kind.left].clause, nodes[kind.right].clause
        if not left.has(kind.pivot, True) or not right.has(kind.pivot, False):
            continue
        expected = resolve(left, right, kind.pivot)
        if expected != node.clause:
            violations.append(
                Violation(
                    "resolvent_label",
                    node.id,
                    f"label {node.clause} differs from the resolvent {expected}",
                )
            )
    return violations


def _rule_leaf_premise(nodes: list[DagNode], gamma: ClauseSet | None) -> list[Violation]:
    if gamma is None:
        return []
    return [
        Violation("leaf_premise", node.id, f"leaf {node.clause} is not an input clause")
        for node in nodes
        if node.is_leaf and node.clause not in gamma
    ]


BUILTIN_RULES: tuple[Rule, ...] = (
    Rule("dense_ids", "Node ids equal their arena position", _rule_dense_ids),
    Rule("parent_exists", "Resolvent parents are nodes of the DAG", _rule_parent_exists),
    Rule("topological_order", "Parents precede their children", _rule_topological_order),
    Rule(
        "pivot_orientation",
        "The left parent holds the positive pivot, the right parent the negative one",
        _rule_pivot_orientation,
    ),
    Rule(
        "resolvent_label",
        "Each resolvent label equals the resolvent of its parents' labels",
        _rule_resolvent_label,
    ),
    Rule("leaf_premise", "Every leaf is labeled with an input clause", _rule_leaf_premise),
)


def check_dag(
    dag: ResolutionDag,
    gamma: ClauseSet | None = None,
    rules: Sequence[Rule] = BUILTIN_RULES,
) -> CheckReport:
    """Re-verify every node of *dag*.

    Args:
        dag: The DAG to check.
        gamma: When given, every leaf must be labeled with a member of it.
            Leaves need not cover all of *gamma*.
        rules: The rules to run. Extra rules can be appended to
            ``BUILTIN_RULES``; dropping built-in ones weakens the check.

    Returns:
        A report listing zero violations iff the DAG is a sound resolution DAG
        (over *gamma* when supplied).
    """
    nodes = list(dag.nodes)
    violations: list[Violation] = []
    for rule in rules:
        violations.extend(rule.check(nodes, gamma))
    if violations:
        logger.debug("check found %d violation(s) in %d nodes", len(violations), len(nodes))
    return CheckReport(
        violations=tuple(violations),
        is_refutation=dag.is_refutation(),
        node_count=len(nodes),
    )
