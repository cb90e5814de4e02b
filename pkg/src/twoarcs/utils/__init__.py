"""Utility modules for twoarcs."""
