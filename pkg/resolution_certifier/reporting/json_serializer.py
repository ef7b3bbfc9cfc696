"""Structured JSON export of refutations.

The document schema is fixed (see ``docs/formats.md``):

.. code-block:: json

    {
        "format": "resolution-dag",
        "version": 1,
        "tool": {"name": "resolution-certifier", "version": "..."},
        "premises": [[1, 2], [-1, 2]],
        "nodes": [
            {"id": 1, "literals": [1, 2], "kind": "leaf", "parents": [], "pivot": null},
            {"id": 3, "literals": [2], "kind": "resolvent", "parents": [1, 2], "pivot": 1}
        ],
        "root": 3,
        "stats": {...}
    }

Ids are 1-based, as in the trace format. The document carries no timestamp
or host data, so identical solves serialise to identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from resolution_certifier import __version__
from resolution_certifier.builder.refutation_builder import BuildStats
from resolution_certifier.core.config import SolverConfig
from resolution_certifier.proof.dag import ResolutionDag, Resolvent

FORMAT_NAME = "resolution-dag"
FORMAT_VERSION = 1


class ProofSerializer:
    """Assembles and serialises the structured proof document."""

    def __init__(self, config: SolverConfig | None = None) -> None:
        """Initialise the serialiser.

        Args:
            config: Optional configuration overrides.
        """
        self._config = config or SolverConfig()

    def build_document(
        self, dag: ResolutionDag, stats: BuildStats | None = None
    ) -> dict[str, Any]:
        """Build the document dictionary for *dag*.

        Args:
            dag: The refutation (or any DAG) to export.
            stats: Optional builder counters to include.

        Returns:
            The JSON-serialisable document.
        """
        root = dag.root()
        document: dict[str, Any] = {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "tool": {"name": "resolution-certifier", "version": __version__},
            "premises": [clause.to_ints() for clause in dag.premises()],
            "nodes": [self._node_entry(node.id, dag) for node in dag],
            "root": None if root is None else root + 1,
        }
        if stats is not None:
            document["stats"] = stats.to_dict()
        return document

    def serialise(self, document: dict[str, Any]) -> str:
        """Serialise the document to a JSON string with a trailing newline."""
        return json.dumps(document, indent=self._config.json_indent, ensure_ascii=True) + "\n"

    def save(self, document: dict[str, Any], path: str | Path) -> Path:
        """Serialise the document and write it to *path*.

        Returns:
            The path of the written file.
        """
        return self.write(self.serialise(document), path)

    @staticmethod
    def write(text: str, path: str | Path) -> Path:
        """Write proof text of any format to *path* as ASCII with LF line endings.

        Missing parent directories are created.

        Returns:
            The path of the written file.
        """
        filepath = Path(path)
        filepath.parent.mkdir(parents=True, exist_ok=True)
        filepath.write_text(text, encoding="ascii", newline="\n")
        return filepath

    @staticmethod
    def _node_entry(node_id: int, dag: ResolutionDag) -> dict[str, Any]:
        node = dag.node(node_id)
        if isinstance(node.kind, Resolvent):
            return {
                "id": node.id + 1,
                "literals": node.clause.to_ints(),
                "kind": "resolvent",
                "parents": [node.kind.left + 1, node.kind.right + 1],
                "pivot": node.kind.pivot,
            }
        return {
            "id": node.id + 1,
            "literals": node.clause.to_ints(),
            "kind": "leaf",
            "parents": [],
            "pivot": None,
        }
