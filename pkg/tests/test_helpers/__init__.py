"""Tests for helpers module."""
