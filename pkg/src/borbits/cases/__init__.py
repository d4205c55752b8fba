"""Executable replications of the explicit case computations."""
