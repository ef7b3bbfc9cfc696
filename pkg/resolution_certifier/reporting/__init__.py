"""Readers and writers: DIMACS, trace proofs, DOT and structured JSON."""
