"""Tests for handlers module."""
