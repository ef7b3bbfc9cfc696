"""Graphviz DOT export of resolution DAGs."""

from __future__ import annotations

from resolution_certifier.proof.dag import ResolutionDag


def to_dot(dag: ResolutionDag, name: str = "resolution") -> str:
    """Render *dag* as deterministic DOT text.

    Node statements come first in id order, then one edge per parent link
    (parent to child). Labels use the clause display syntax, ``[]`` for the
    empty clause; leaves are drawn as boxes.
    """
    lines = [f"digraph {name} {{"]
    for node in dag:
        shape = "box" if node.is_leaf else "ellipse"
        lines.append(f'  n{node.id + 1} [label="{node.clause}", shape={shape}];')
    for node in dag:
        for parent in node.parents:
            lines.append(f"  n{parent + 1} -> n{node.id + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
