"""Propositional building blocks: literals, clauses, clause sets, assignments."""
