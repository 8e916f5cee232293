"""Tests for utility modules.""" 