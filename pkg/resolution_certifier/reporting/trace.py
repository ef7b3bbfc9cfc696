"""Trace proof format.

One line per node, ids 1-based in arena order, literals in DIMACS form::

    <id> <lit>... 0 0                      leaf
    <id> <lit>... 0 <left> <right> 0       resolvent

The left parent carries the positive pivot literal. Pivots are not written;
the reader infers them from the parent labels. Blank lines and ``c`` comment
lines are skipped.
"""

from __future__ import annotations

from resolution_certifier.core.errors import TraceFormatError
from resolution_certifier.logic.clauses import Clause, resolve
from resolution_certifier.proof.dag import DagNode, Leaf, ResolutionDag, Resolvent


def to_trace(dag: ResolutionDag) -> str:
    """Serialise *dag* to trace text (LF line endings, trailing newline)."""
    lines = []
    for node in dag:
        lits = " ".join(str(v) for v in node.clause.to_ints())
        head = f"{node.id + 1} {lits} 0" if lits else f"{node.id + 1} 0"
        if isinstance(node.kind, Resolvent):
            lines.append(f"{head} {node.kind.left + 1} {node.kind.right + 1} 0")
        else:
            lines.append(f"{head} 0")
    return "".join(line + "\n" for line in lines)


def _infer_pivot(left: Clause, right: Clause, label: Clause) -> int:
    candidates = [lit.atom for lit in left if lit.positive and right.has(lit.atom, False)]
    for atom in candidates:
        if resolve(left, right, atom) == label:
            return atom
    # no exact match: keep the first orientation-valid pivot and let the checker report it
    return candidates[0] if candidates else 0


def parse_trace(text: str) -> ResolutionDag:
    """Read trace text into a DAG without validating its logic.

    Ids must run 1, 2, 3, ... in line order. Parent references are kept even
    when they are out of range or point forward; ``check_dag`` reports them.

    Raises:
        TraceFormatError: On non-integer tokens, misnumbered ids, or lines that
            do not follow either line shape.
    """
    nodes: list[DagNode] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        try:
            values = [int(token) for token in line.split()]
        except ValueError:
            raise TraceFormatError(f"non-integer token in '{line}'", line_no) from None
        if values[0] != len(nodes) + 1:
            raise TraceFormatError(f"expected node id {len(nodes) + 1}, got {values[0]}", line_no)
        try:
            end = values.index(0, 1)
        except ValueError:
            raise TraceFormatError("clause is not terminated by 0", line_no) from None
        clause = Clause.from_ints(values[1:end])
        tail = values[end + 1 :]
        node_id = len(nodes)
        if tail == [0]:
            nodes.append(DagNode(node_id, clause, Leaf()))
        elif len(tail) == 3 and tail[2] == 0 and tail[0] != 0 and tail[1] != 0:
            left, right = tail[0] - 1, tail[1] - 1
            pivot = 0
            if 0 <= left < node_id and 0 <= right < node_id:
                pivot = _infer_pivot(nodes[left].clause, nodes[right].clause, clause)
            nodes.append(DagNode(node_id, clause, Resolvent(left, right, pivot)))
        else:
            raise TraceFormatError("expected '0' or '<left> <right> 0' after the clause", line_no)
    return ResolutionDag.from_nodes(nodes)
