"""
Tests for twoarcs.
"""
