"""
twoarcs - polynomial inverse images of [-1, 1] that consist of two Jordan arcs.
"""

__version__ = "0.1.0"
