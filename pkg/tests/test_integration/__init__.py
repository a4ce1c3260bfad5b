"""Integration tests for asdbench."""
