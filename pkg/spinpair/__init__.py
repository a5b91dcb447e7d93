"""Exact two-spin entanglement dynamics."""
