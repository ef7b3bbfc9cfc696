"""DAG transformations used to combine sub-refutations.

``percolate`` adds a literal to one premise and recomputes every resolvent
top-down on its recorded pivot. Each new label is the old label or the old
label plus the literal, every step stays a valid resolution step, and a
refutation turns into a DAG whose root is the empty clause or the unit
clause of the added literal.

``graft`` plugs the root of one DAG into the premise of another DAG that
carries the same clause.

Both build fresh DAGs through ``add_leaf`` / ``add_resolvent``, so leaf
hash-consing and step validity hold for the results by construction.
"""

from __future__ import annotations

import logging

from resolution_certifier.core.errors import NoMatchingPremiseError, NotALeafError
from resolution_certifier.logic.clauses import Literal
from resolution_certifier.proof.dag import NodeId, ResolutionDag, Resolvent

logger = logging.getLogger(__name__)


def _copy_into(
    target: ResolutionDag,
    source: ResolutionDag,
    preset: dict[NodeId, NodeId] | None = None,
    enlarge: tuple[NodeId, Literal] | None = None,
) -> dict[NodeId, NodeId]:
    """Replay *source* into *target* and return the old-to-new id map.

    Nodes listed in *preset* are not copied; their edges are redirected to the
    given ids. With *enlarge* = ``(leaf, literal)`` that leaf is added with the
    literal included.
    """
    mapping: dict[NodeId, NodeId] = dict(preset or {})
    for node in source:
        if node.id in mapping:
            continue
        if isinstance(node.kind, Resolvent):
            kind = node.kind
            mapping[node.id] = target.add_resolvent(
                mapping[kind.left], mapping[kind.right], kind.pivot
            )
        elif enlarge is not None and node.id == enlarge[0]:
            mapping[node.id] = target.add_leaf(node.clause.union(enlarge[1]))
        else:
            mapping[node.id] = target.add_leaf(node.clause)
    return mapping


def percolate_with_mapping(
    dag: ResolutionDag, leaf: NodeId, literal: Literal
) -> tuple[ResolutionDag, dict[NodeId, NodeId]]:
    """Add *literal* to the premise at *leaf* and push it towards the root.

    Args:
        dag: The DAG to transform; it is not modified.
        leaf: A leaf of *dag*.
        literal: The literal to add.

    Returns:
        The new DAG and the map from each node of *dag* to its corresponding
        node. The map is a bijection unless the enlarged premise equals
        another premise, in which case the two leaves merge.

    Raises:
        NotALeafError: If *leaf* is an interior node.
    """
    if not dag.node(leaf).is_leaf:
        raise NotALeafError(f"node {leaf} is a resolvent, not a premise leaf")
    result = ResolutionDag()
    mapping = _copy_into(result, dag, enlarge=(leaf, literal))
    logger.debug(
        "percolated %s into premise %s: %d nodes, sinks %s",
        literal,
        dag.label(leaf),
        len(result),
        [str(result.label(s)) for s in result.sinks()],
    )
    return result, mapping


def percolate(dag: ResolutionDag, leaf: NodeId, literal: Literal) -> ResolutionDag:
    """Return ``percolate_with_mapping(dag, leaf, literal)`` without the map."""
    return percolate_with_mapping(dag, leaf, literal)[0]


def graft(first: ResolutionDag, second: ResolutionDag) -> ResolutionDag:
    """Connect the root of *first* to the premise of *second* with the same label.

    The result holds all of *first*, then all of *second* except that premise
    leaf, whose outgoing edges now leave the root of *first*. Premise leaves
    common to both DAGs are merged.

    Raises:
        NoMatchingPremiseError: If *first* has no unique root, or no leaf of
            *second* carries the root's clause.
    """
    root = first.root()
    if root is None:
        raise NoMatchingPremiseError(
            f"cannot graft a DAG with {len(first.sinks())} sinks; exactly one is required"
        )
    clause = first.label(root)
    premise = second.leaf_for(clause)
    if premise is None:
        raise NoMatchingPremiseError(f"no premise of the second DAG is labeled {clause}")
    result = ResolutionDag()
    first_map = _copy_into(result, first)
    _copy_into(result, second, preset={premise: first_map[root]})
    logger.debug(
        "grafted %d + %d nodes on %s into %d nodes", len(first), len(second), clause, len(result)
    )
    return result
