"""Brute-force truth-table oracle used as ground truth in tests."""
