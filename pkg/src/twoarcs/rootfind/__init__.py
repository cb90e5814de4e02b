"""Complex polynomial root finding."""

from twoarcs.rootfind.aberth import (
    ExactRoots,
    Root,
    RootSet,
    all_roots,
    exact_roots,
    real_roots_in,
)

__all__ = ["ExactRoots", "Root", "RootSet", "all_roots", "exact_roots", "real_roots_in"]
