"""Deterministic CNF instance families."""
