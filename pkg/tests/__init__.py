"""Tests for tits-alternative-toolkit."""
