"""Shared fixtures."""

from __future__ import annotations

import pytest

from resolution_certifier.logic.clauses import ClauseSet
from resolution_certifier.proof.dag import ResolutionDag
from tests.factories import four_clauses, full_refutation, unit_q_refutation


@pytest.fixture
def gamma() -> ClauseSet:
    return four_clauses()


@pytest.fixture
def refutation() -> ResolutionDag:
    return full_refutation()


@pytest.fixture
def small_refutation() -> ResolutionDag:
    return unit_q_refutation()


@pytest.fixture
def cnf_file(tmp_path, gamma):
    from resolution_certifier.reporting.dimacs import format_dimacs

    path = tmp_path / "four.cnf"
    path.write_text(format_dimacs(gamma))
    return path
