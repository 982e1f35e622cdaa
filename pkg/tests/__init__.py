"""Tests for plactic-hopf."""
