"""Core: configuration, errors and the command runner."""
